// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "gammagrammar/checks.hpp"

using namespace gg;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> checks;
    double limit_seconds = 0;  // 0: no limit
    bool report = false;
};

}  // namespace

int main() {
    CheckParams params;
    params.opts.workers = 1;
    params.cases = 1000;

    std::vector<Criterion> criteria{
        {1, "golden values", {"golden"}, 10},
        {2, "enumeration = grammar = recurrence",
         {"typeB-triple", "stirling-triple", "legendre-triple", "jacobi-triple"}, 120},
        {3, "changes of grammar and derive/substitute commutation", {"transforms"}},
        {4, "group actions", {"actions-involution", "actions-example", "orbit-counts"}},
        {5, "slice identities", {"eulerian-slice", "top-slices"}},
        {6, "open-question reports", {"conjecture-jsp", "guo-zeng"}, 0, true},
        {7, "property suites", {"ring-axioms", "leibniz", "parse-roundtrip", "gamma-reconstruction"}},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        std::string notes;
        auto start = std::chrono::steady_clock::now();
        for (const auto& id : c.checks) {
            try {
                auto r = run_check(id, params);
                if (c.report) {
                    bool verdict = r.details.contains("all_positive") ? r.details["all_positive"].get<bool>()
                                                                      : r.details["all_nonnegative"].get<bool>();
                    notes += " " + id + "=" + (verdict ? "nonnegative" : "NEGATIVE");
                    if (id == "conjecture-jsp")
                        for (const auto& v : r.details["verdicts"])
                            if (!v["positive"].get<bool>()) std::printf("  witness %s\n", v.dump().c_str());
                } else if (!r.passed) {
                    ok = false;
                    notes += " " + id + " failed: " + r.details.dump();
                }
            } catch (const std::exception& e) {
                ok = false;
                notes += " " + id + " threw: " + e.what();
            }
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            ok = false;
            notes += " over time limit " + std::to_string(c.limit_seconds) + " s";
        }
        if (!ok) ++failures;
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                    c.report ? " [report]" : "", notes.c_str());
    }
    return failures == 0 ? 0 : 1;
}
