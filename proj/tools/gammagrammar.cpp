// gammagrammar: command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gammagrammar/actions.hpp"
#include "gammagrammar/checks.hpp"
#include "gammagrammar/error.hpp"
#include "gammagrammar/gammalib.hpp"
#include "gammagrammar/grammar.hpp"
#include "gammagrammar/recurtab.hpp"

using namespace gg;

namespace {

enum Exit { kPass = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

struct Globals {
    bool json = false;
    unsigned workers = 1;
    std::optional<unsigned> budget;
    unsigned seed = 20181105;
    double wall_clock = 0;
};

GenOptions options(const Globals& g) {
    GenOptions o;
    o.workers = g.workers;
    o.budget = g.budget;
    return o;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_file(const std::string& path) {
    if (path == "-") return slurp(std::cin);
    std::ifstream f(path);
    if (!f) throw Error("cannot read " + path);
    return slurp(f);
}

// Accepts polynomial text, a polynomial JSON array, or any JSON object with a "polynomial" field.
Polynomial read_polynomial(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        auto j = nlohmann::json::parse(text);
        if (j.is_object()) j = j.at("polynomial");
        if (j.is_string()) return Polynomial::parse(j.get<std::string>());
        return polynomial_from_json(j);
    }
    auto last = text.find_last_not_of(" \t\r\n");
    return Polynomial::parse(first == std::string::npos ? "" : text.substr(first, last - first + 1));
}

void print_polynomial(const Globals& g, const Polynomial& p) {
    if (g.json)
        std::cout << nlohmann::json{{"text", p.to_string()}, {"polynomial", to_json(p)}}.dump() << "\n";
    else
        std::cout << p.to_string() << "\n";
}

std::vector<Grammar> grammars(const std::vector<std::string>& names) {
    std::vector<Grammar> out;
    for (const auto& n : names) out.push_back(preset(n));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    Globals g;
    if (const char* b = std::getenv("GAMMAGRAMMAR_BUDGET")) {
        try {
            g.budget = static_cast<unsigned>(std::stoul(b));
        } catch (const std::exception&) {
            std::cerr << "error: GAMMAGRAMMAR_BUDGET must be a nonnegative integer\n";
            return kUsage;
        }
    }

    CLI::App app{"Context-free grammars, gamma-positivity and the combinatorics behind them"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--workers", g.workers, "enumeration worker threads")->check(CLI::PositiveNumber);
    app.add_option("--budget", g.budget, "largest n allowed for any family (default: per family)");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--wall-clock", g.wall_clock, "abort with exit 3 after this many seconds");

    // derive
    auto* derive_cmd = app.add_subcommand("derive", "iterate a grammar's derivation");
    std::string grammar_name, rules_file, start, alternating, sequence;
    unsigned steps = 1, rounds = 1;
    auto* og = derive_cmd->add_option("--grammar", grammar_name, "preset grammar");
    auto* orules = derive_cmd->add_option("--rules", rules_file, "grammar file ('var -> poly' lines)");
    auto* oalt = derive_cmd->add_option("--alternating", alternating, "comma-separated presets applied in turn");
    auto* oseq = derive_cmd->add_option("--sequence", sequence, "comma-separated presets applied cyclically");
    og->excludes(orules)->excludes(oalt)->excludes(oseq);
    orules->excludes(oalt)->excludes(oseq);
    oalt->excludes(oseq);
    derive_cmd->add_option("--start", start, "start polynomial")->required();
    derive_cmd->add_option("--steps", steps, "number of derivations");
    derive_cmd->add_option("--rounds", rounds, "rounds for --alternating");
    derive_cmd->add_flag_callback("--list", [] {
        for (const auto& n : preset_names()) std::cout << n << "\n";
        std::exit(kPass);
    }, "list preset grammars");

    // enumerate
    auto* enum_cmd = app.add_subcommand("enumerate", "distribution of statistics over a family");
    std::string family, stats = "des:x", removed;
    unsigned n = 1;
    enum_cmd->add_option("--family", family, "family name")->required();
    enum_cmd->add_option("--n", n, "order")->required();
    enum_cmd->add_option("--stats", stats, "stat:var list, e.g. asc:x,des:y,plat:z");
    enum_cmd->add_option("--removed-bars", removed, "jacobi-partial: comma-separated k with bar(k) removed");

    // gamma
    auto* gamma_cmd = app.add_subcommand("gamma", "gamma expansions");
    std::string poly_text, input = "-", zv = "z", xv = "x", yv = "y";
    std::optional<int> degree;
    auto* opoly = gamma_cmd->add_option("--poly", poly_text, "polynomial text");
    gamma_cmd->add_option("--input", input, "file with text or JSON (default stdin)")->excludes(opoly);
    gamma_cmd->add_option("--degree", degree, "univariate expansion about this degree (in --x)");
    gamma_cmd->add_option("--z", zv, "slicing variable");
    gamma_cmd->add_option("--x", xv, "first variable of the symmetric pair");
    gamma_cmd->add_option("--y", yv, "second variable of the symmetric pair");

    // table
    auto* table_cmd = app.add_subcommand("table", "coefficient tables from the recurrences");
    std::string table_name, format = "tsv";
    unsigned table_n = 1;
    table_cmd->add_option("--name", table_name, "table name")->required();
    table_cmd->add_option("--n", table_n, "order")->required();
    table_cmd->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

    // orbit
    auto* orbit_cmd = app.add_subcommand("orbit", "orbits of the group action");
    std::string orbit_family;
    unsigned orbit_n = 1;
    bool members = false;
    orbit_cmd->add_option("--family", orbit_family, "perm, typeB-derangements, stirling, jacobi, jacobi-deleted")
        ->required();
    orbit_cmd->add_option("--n", orbit_n, "order")->required();
    orbit_cmd->add_flag("--members", members, "list orbit members");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification checks (JSON report)");
    std::string check = "all";
    std::optional<unsigned> vn, vk;
    unsigned cases = 1000;
    verify_cmd->add_option("--check", check, "check id or 'all'");
    verify_cmd->add_option("--n", vn, "size override");
    verify_cmd->add_option("--k", vk, "order for conjecture-jsp");
    verify_cmd->add_option("--cases", cases, "cases for randomized checks");
    verify_cmd->add_flag_callback("--list", [] {
        for (const auto& e : check_catalog())
            std::cout << e.id << "\t" << e.description << (e.report_only ? " [report]" : "") << "\n";
        std::exit(kPass);
    }, "list check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    if (g.wall_clock > 0) {
        std::thread([limit = g.wall_clock] {
            std::this_thread::sleep_for(std::chrono::duration<double>(limit));
            std::cerr << "error: wall-clock limit of " << limit << " s exceeded\n";
            std::_Exit(kBudget);
        }).detach();
    }

    try {
        if (derive_cmd->parsed()) {
            Polynomial p = Polynomial::parse(start);
            Polynomial out;
            if (!alternating.empty()) {
                auto gs = grammars(split(alternating, ','));
                out = derive_alternating(gs, p, rounds);
            } else if (!sequence.empty()) {
                auto gs = grammars(split(sequence, ','));
                out = derive_sequence(gs, p, steps);
            } else if (!rules_file.empty()) {
                out = derive_n(Grammar::parse(read_file(rules_file), rules_file), p, steps);
            } else if (!grammar_name.empty()) {
                out = derive_n(preset(grammar_name), p, steps);
            } else {
                throw Error("derive needs --grammar, --rules, --alternating or --sequence");
            }
            print_polynomial(g, out);
        } else if (enum_cmd->parsed()) {
            GenOptions o = options(g);
            for (const auto& k : split(removed, ',')) o.removed_bars.push_back(std::stoi(k));
            auto d = distribution(family_from_string(family), n, parse_stat_bindings(stats), o);
            if (g.json)
                std::cout << to_json(d).dump() << "\n";
            else
                std::cout << d.polynomial.to_string() << "\n";
        } else if (gamma_cmd->parsed()) {
            Polynomial p = read_polynomial(opoly->count() ? poly_text : read_file(input));
            nlohmann::json out;
            if (degree) {
                out = to_json(gamma_expand(p, *degree, xv));
            } else {
                out = to_json(partial_gamma(p, zv, xv, yv));
            }
            std::cout << out.dump() << "\n";
        } else if (table_cmd->parsed()) {
            auto t = table_by_name(table_name, table_n);
            if (g.json || format == "json")
                std::cout << to_json(t).dump() << "\n";
            else
                std::cout << to_tsv(t);
        } else if (orbit_cmd->parsed()) {
            auto orbits = orbit_decompose(family_from_string(orbit_family), orbit_n, options(g));
            if (g.json) {
                auto arr = nlohmann::json::array();
                for (const auto& o : orbits) {
                    auto j = to_json(o);
                    if (members) j["members"] = o.members;
                    arr.push_back(j);
                }
                std::cout << arr.dump() << "\n";
            } else {
                for (const auto& o : orbits) {
                    std::cout << o.representative << "\t" << o.orbit_size << "\t" << o.weight.to_string();
                    if (members) {
                        std::cout << "\t";
                        for (std::size_t i = 0; i < o.members.size(); ++i)
                            std::cout << (i ? " | " : "") << o.members[i];
                    }
                    std::cout << "\n";
                }
            }
        } else if (verify_cmd->parsed()) {
            CheckParams params;
            params.n = vn;
            params.k = vk;
            params.opts = options(g);
            params.seed = g.seed;
            params.cases = cases;
            std::vector<std::string> ids;
            if (check == "all") {
                for (const auto& e : check_catalog()) ids.push_back(e.id);
            } else {
                bool known = false;
                for (const auto& e : check_catalog()) known = known || e.id == check;
                if (!known) {
                    std::cerr << "error: unknown check id " << check << "\n";
                    return kUsage;
                }
                ids.push_back(check);
            }
            auto results = nlohmann::json::array();
            bool ok = true;
            for (const auto& id : ids) {
                auto r = run_check(id, params);
                ok = ok && r.passed;
                results.push_back(to_json(r));
            }
            std::cout << nlohmann::json{{"passed", ok}, {"checks", results}}.dump(g.json ? -1 : 2) << "\n";
            return ok ? kPass : kCheckFailed;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kPass;
}
