#pragma once

// Catalog of verification checks run by `gammagrammar verify` and the acceptance suite.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gammagrammar/combinat.hpp"
#include "gammagrammar/polynomial.hpp"
#include "gammagrammar/recurtab.hpp"

namespace gg {

struct CheckParams {
    std::optional<unsigned> n;  // overrides the check's default size
    std::optional<unsigned> k;  // conjecture-jsp order
    GenOptions opts;
    unsigned seed = 20181105;
    unsigned cases = 1000;  // randomized suites
};

struct CheckResult {
    std::string id;
    bool passed = true;
    bool report_only = false;
    double seconds = 0;
    nlohmann::json details = nlohmann::json::object();

    std::string status() const { return report_only ? "report" : passed ? "pass" : "fail"; }
};

struct CheckCatalogEntry {
    std::string id;
    std::string description;
    unsigned default_n = 0;
    std::vector<std::string> pipelines;
    bool report_only = false;
    std::function<CheckResult(const CheckParams&)> run;
};

const std::vector<CheckCatalogEntry>& check_catalog();
/// Runs one check and fills in its id, timing and report flag. Throws Error for an unknown id.
CheckResult run_check(const std::string& id, const CheckParams& params = {});

nlohmann::json to_json(const CheckResult& r);

/// Reads coefficient keys (exponent of vi, exponent of vj) after dividing by `prefactor`.
/// Throws InternalError if two terms share a key.
CoefficientTable read_table(const std::string& name, unsigned n, const Polynomial& p, const VarId& vi,
                            const VarId& vj, const Monomial& prefactor = {});

/// Grammar read-offs: the tables as coefficients of iterated derivatives.
CoefficientTable grammar_table_g(unsigned n);
CoefficientTable grammar_table_gamma_stirling(unsigned n);
CoefficientTable grammar_table_l(unsigned n);
CoefficientTable grammar_table_h(unsigned n);
CoefficientTable grammar_table_s(unsigned n);
CoefficientTable grammar_table_t(unsigned n);

/// Enumeration read-offs: the tables as partial gamma coefficients of distributions.
CoefficientTable enumeration_table_g(unsigned n, const GenOptions& opts = {});
CoefficientTable enumeration_table_gamma_stirling(unsigned n, const GenOptions& opts = {});
CoefficientTable enumeration_table_l(unsigned n, const GenOptions& opts = {});
CoefficientTable enumeration_table_h(unsigned n, const GenOptions& opts = {});
CoefficientTable enumeration_table_s(unsigned n, const GenOptions& opts = {});
CoefficientTable enumeration_table_t(unsigned n, const GenOptions& opts = {});

/// Orbit read-offs: representatives counted by their statistics.
CoefficientTable orbit_table(Family f, unsigned n, const GenOptions& opts = {});

}  // namespace gg
