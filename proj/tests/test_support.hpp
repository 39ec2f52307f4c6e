#pragma once

#include <random>
#include <string>
#include <vector>

#include "gammagrammar/polynomial.hpp"

namespace gg::testing {

inline Polynomial P(const char* text) { return Polynomial::parse(text); }

/// Seed for randomized suites; GAMMAGRAMMAR_SEED overrides the default.
inline unsigned test_seed() {
    if (const char* s = std::getenv("GAMMAGRAMMAR_SEED")) return static_cast<unsigned>(std::stoul(s));
    return 20181105u;
}

/// Random Laurent polynomial: up to `max_terms` terms over `vars`, exponents in [lo, hi],
/// coefficients in [-99, 99].
inline Polynomial random_polynomial(std::mt19937& rng, const std::vector<VarId>& vars,
                                    int max_terms = 4, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(lo, hi);
    std::uniform_int_distribution<int> coeff(-99, 99);
    Polynomial p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<Monomial::Entry> entries;
        for (const auto& v : vars) entries.emplace_back(v, exp(rng));
        p.add_term(Monomial::from_pairs(std::move(entries)), coeff(rng));
    }
    return p;
}

}  // namespace gg::testing
