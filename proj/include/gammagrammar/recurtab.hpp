#pragma once

// Coefficient tables computed from their recurrences.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gammagrammar/polynomial.hpp"

namespace gg {

struct CoefficientTable {
    std::string name;
    unsigned n = 0;
    bool two_dim = true;                           // false: entries keyed (k, 0)
    std::map<std::pair<int, int>, Integer> entries;  // nonzero only

    Integer at(int i, int j = 0) const;
    Integer sum() const;
    /// sum e(i,j) x^i y^j, or sum e(k) x^k for one-dimensional tables.
    Polynomial polynomial(const VarId& x = "x", const VarId& y = "y") const;
    /// Rebuilds a table from a polynomial in x (and y).
    static CoefficientTable from_polynomial(std::string name, unsigned n, bool two_dim, const Polynomial& p,
                                            const VarId& x = "x", const VarId& y = "y");
    friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

/// a(n,k): A_n(x) = sum a(n,k) x^k (1+x)^(n+1-2k).
CoefficientTable table_a(unsigned n);
/// g_n(i,j); table_g(0) is the constant 1.
CoefficientTable table_g(unsigned n);
/// gamma_{n,i,j} of the Stirling permutation expansion.
CoefficientTable table_gamma_stirling(unsigned n);
/// (h_n, l_n) from the coupled recurrence.
std::pair<CoefficientTable, CoefficientTable> tables_h_l(unsigned n);
/// l_n from its standalone recurrence.
CoefficientTable table_l_standalone(unsigned n);
/// (s_n, t_n) from the coupled recurrence.
std::pair<CoefficientTable, CoefficientTable> tables_s_t(unsigned n);
/// s_n from its standalone recurrence (seeded at s_0).
CoefficientTable table_s_standalone(unsigned n);
/// b(n,k): B_n(x) = sum b(n,k) x^k (1+x)^(n-2k), read from the typeB-uv grammar.
CoefficientTable table_b(unsigned n);
/// d(n,k): d_n(x) = sum d(n,k) x^k (1+x)^(n-2k), read from the derangement-uv grammar.
CoefficientTable table_d(unsigned n);
/// Eulerian numbers <n k>, 1 <= k <= n.
CoefficientTable table_eulerian(unsigned n);
/// Type B Eulerian numbers B(n,k), 0 <= k <= n.
CoefficientTable table_eulerian_b(unsigned n);

std::vector<std::string> table_names();
/// Looks up a table by name (see table_names). Throws UnknownRecurrence.
CoefficientTable table_by_name(const std::string& name, unsigned n);

/// g_{n+1} = x g_n + sum_{k<n} C(n,k) 2^(n+1-k) g_k a_{n-k}(y).
bool leibniz_corollary_check(unsigned n);
/// Checks the differential-operator form of a recurrence for every step up to n.
/// name is one of g, gamma-stirling, h-l, s-t. Throws UnknownRecurrence.
bool polyform_recurrence_check(const std::string& name, unsigned n);

std::string to_tsv(const CoefficientTable& t);
nlohmann::json to_json(const CoefficientTable& t);

}  // namespace gg
