#pragma once

// Exact sparse multivariate Laurent polynomials over the integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <functional>
#include <map>
#include "json.hpp"
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Variable name: a letter followed by letters, digits or underscores.
class VarId {
   public:
    VarId(std::string name);
    VarId(std::string_view name) : VarId(std::string(name)) {}
    VarId(const char* name) : VarId(std::string(name)) {}

    const std::string& name() const noexcept { return name_; }

    static bool is_valid(std::string_view name) noexcept;

    friend bool operator==(const VarId&, const VarId&) = default;
    friend auto operator<=>(const VarId& a, const VarId& b) { return a.name_ <=> b.name_; }

   private:
    std::string name_;
};

/// Product of variables raised to signed exponents. Zero exponents are never stored.
class Monomial {
   public:
    using Entry = std::pair<VarId, int>;

    Monomial() = default;
    static Monomial var(const VarId& v, int exponent = 1);
    /// Builds from arbitrary (var, exponent) pairs; repeated variables are merged.
    static Monomial from_pairs(std::vector<Entry> pairs);

    int exponent(const VarId& v) const noexcept;
    int total_degree() const noexcept;
    bool is_one() const noexcept { return exps_.empty(); }
    bool has_negative_exponent() const noexcept;
    const std::vector<Entry>& exponents() const noexcept { return exps_; }

    Monomial without(const VarId& v) const;
    Monomial inverse() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded order: total degree first, then exponents compared variable by variable in
    /// name order (smaller exponent of the first differing variable sorts first).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

   private:
    std::vector<Entry> exps_;  // sorted by variable name
};

class Polynomial {
   public:
    using TermMap = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(long long c);
    Polynomial(const Integer& c);
    static Polynomial var(const VarId& v, int exponent = 1);
    static Polynomial term(const Monomial& m, const Integer& c = 1);

    /// Parses the text form, e.g. "x*y^2 - 3*z^-1 + 7".
    static Polynomial parse(std::string_view text);
    /// Canonical text form; inverse of parse.
    std::string to_string() const;

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }
    Integer coeff(const Monomial& m) const;
    std::set<VarId> variables() const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Integer& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Replaces every occurrence of `v` by `q`. Negative powers of `v` require `q` to be a
/// single monomial with coefficient +1 or -1.
Polynomial substitute(const Polynomial& p, const VarId& v, const Polynomial& q);
/// Simultaneous substitution of several variables.
Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& defs);

/// Formal partial derivative, power rule valid for negative exponents.
Polynomial partial(const Polynomial& p, const VarId& v);

Rational evaluate(const Polynomial& p, const std::map<VarId, Rational>& assignment);

/// Splits p = sum_i v^i * slice_i. Slices are free of v; the map is ordered by i.
std::map<int, Polynomial> coeff_slices(const Polynomial& p, const VarId& v);

/// Coefficient of v^i (a polynomial in the remaining variables).
Polynomial coeff_of(const Polynomial& p, const VarId& v, int i);

/// Multiplies every term by the monomial m (exact, may create negative exponents).
Polynomial shift(const Polynomial& p, const Monomial& m);

/// Divides each exponent of the listed variables by its divisor; throws InternalError
/// if some exponent is not divisible.
Polynomial divide_exponents(const Polynomial& p, const std::map<VarId, int>& divisors);

/// True if every term has the same total degree in `vars` (all variables if empty).
bool is_homogeneous(const Polynomial& p, const std::vector<VarId>& vars = {});

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

std::string to_string(const Integer& c);
/// JSON number when the value fits in 64 bits, decimal string otherwise.
nlohmann::json integer_to_json(const Integer& c);

}  // namespace gg
