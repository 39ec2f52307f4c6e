#pragma once

// Gamma expansions: univariate x^k(1+x)^(d-2k), bivariate (xy)^j(x+y)^(d-2j), and the
// sliced (partial) form.

#include <map>
#include <optional>
#include <vector>

#include "gammagrammar/combinat.hpp"
#include "gammagrammar/polynomial.hpp"

namespace gg {

struct GammaVector {
    int d = 0;
    std::vector<Integer> gammas;  // gamma_0 .. gamma_{d/2}

    bool nonnegative() const;
    friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// Expands f (univariate in x) as sum gamma_k x^k (1+x)^(d-2k).
/// Throws NotSymmetric when f is not palindromic about d/2 (or exceeds degree d).
GammaVector gamma_expand(const Polynomial& f, int d, const VarId& x = "x");
Polynomial gamma_reconstruct(const GammaVector& g, const VarId& x = "x");

/// Expands p, homogeneous of degree d in x and y, as sum c_j (xy)^j (x+y)^(d-2j).
/// Throws NotHomogeneous, NotSymmetric.
GammaVector gamma_expand_xy(const Polynomial& p, int d, const VarId& x = "x", const VarId& y = "y");
Polynomial gamma_reconstruct_xy(const GammaVector& g, const VarId& x = "x", const VarId& y = "y");

struct GammaWitness {
    int slice = 0;
    int j = 0;
    Integer gamma;
};

struct PartialGammaExpansion {
    VarId z_var{"z"}, x_var{"x"}, y_var{"y"};
    std::map<int, GammaVector> slices;  // exponent of z -> expansion of that slice
    bool positive = true;
    std::optional<GammaWitness> witness;  // first negative coefficient
};

/// Slices p by powers of z and expands each slice in (x, y). Slice errors are rethrown
/// with the slice index in the message.
PartialGammaExpansion partial_gamma(const Polynomial& p, const VarId& z = "z", const VarId& x = "x",
                                    const VarId& y = "y");
Polynomial reconstruct(const PartialGammaExpansion& e);

struct ConjectureReport {
    unsigned k = 0, i = 0;
    std::size_t words = 0;
    Polynomial distribution;  // x^asc y^des z^plat over JSP_{k,i}
    PartialGammaExpansion expansion;
};

/// Partial gamma expansion of JSP_{k,i}: Jacobi-Stirling words of order k with exactly i
/// barred letters removed (union over all such sets). Requires 1 <= i <= k-1.
ConjectureReport conjecture_check_jsp(unsigned k, unsigned i, const GenOptions& opts = {});

struct GuoZengReport {
    unsigned n = 0;
    Polynomial descent_poly;  // I_n(x)
    GammaVector gamma;        // about degree n-1
};

/// Gamma vector of the involution descent polynomial about degree n-1.
GuoZengReport guo_zeng_check(unsigned n, const GenOptions& opts = {});

nlohmann::json to_json(const GammaVector& g);
nlohmann::json to_json(const PartialGammaExpansion& e);
nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const GuoZengReport& r);

}  // namespace gg
