#include "gammagrammar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

#include "gammagrammar/error.hpp"

namespace gg {

// ---------------------------------------------------------------------------
// VarId

VarId::VarId(std::string name) : name_(std::move(name)) {
    if (!is_valid(name_)) throw Error("invalid variable name '" + name_ + "'");
}

bool VarId::is_valid(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(const VarId& v, int exponent) {
    Monomial m;
    if (exponent != 0) m.exps_.emplace_back(v, exponent);
    return m;
}

Monomial Monomial::from_pairs(std::vector<Entry> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, e] : pairs) {
        if (!m.exps_.empty() && m.exps_.back().first == v) {
            m.exps_.back().second += e;
            if (m.exps_.back().second == 0) m.exps_.pop_back();
        } else if (e != 0) {
            m.exps_.emplace_back(std::move(v), e);
        }
    }
    return m;
}

int Monomial::exponent(const VarId& v) const noexcept {
    auto it = std::lower_bound(exps_.begin(), exps_.end(), v,
                               [](const Entry& e, const VarId& key) { return e.first < key; });
    return (it != exps_.end() && it->first == v) ? it->second : 0;
}

int Monomial::total_degree() const noexcept {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

bool Monomial::has_negative_exponent() const noexcept {
    return std::any_of(exps_.begin(), exps_.end(), [](const Entry& e) { return e.second < 0; });
}

Monomial Monomial::without(const VarId& v) const {
    Monomial m;
    for (const auto& e : exps_)
        if (!(e.first == v)) m.exps_.push_back(e);
    return m;
}

Monomial Monomial::inverse() const {
    Monomial m = *this;
    for (auto& e : m.exps_) e.second = -e.second;
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.exps_.reserve(a.exps_.size() + b.exps_.size());
    auto i = a.exps_.begin();
    auto j = b.exps_.begin();
    while (i != a.exps_.end() || j != b.exps_.end()) {
        if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
            r.exps_.push_back(*i++);
        } else if (i == a.exps_.end() || j->first < i->first) {
            r.exps_.push_back(*j++);
        } else {
            int e = i->second + j->second;
            if (e != 0) r.exps_.emplace_back(i->first, e);
            ++i;
            ++j;
        }
    }
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    auto i = a.exps_.begin();
    auto j = b.exps_.begin();
    while (i != a.exps_.end() || j != b.exps_.end()) {
        int ea, eb;
        if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
            ea = i->second;
            eb = 0;
            ++i;
        } else if (i == a.exps_.end() || j->first < i->first) {
            ea = 0;
            eb = j->second;
            ++j;
        } else {
            ea = i->second;
            eb = j->second;
            ++i;
            ++j;
        }
        if (ea != eb) return ea <=> eb;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(long long c) {
    if (c != 0) terms_.emplace(Monomial{}, Integer(c));
}

Polynomial::Polynomial(const Integer& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::var(const VarId& v, int exponent) {
    return term(Monomial::var(v, exponent));
}

Polynomial Polynomial::term(const Monomial& m, const Integer& c) {
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Integer Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::set<VarId> Polynomial::variables() const {
    std::set<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exponents()) vars.insert(v);
    return vars;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial operator-(Polynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
}

std::string to_string(const Integer& c) { return c.str(); }

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Integer mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (m.is_one() || mag != 1) {
            out << mag.str();
            need_star = true;
        }
        for (const auto& [v, e] : m.exponents()) {
            if (need_star) out << '*';
            out << v.name();
            if (e != 1) out << '^' << e;
            need_star = true;
        }
    }
    return out.str();
}

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial run() {
        skip_ws();
        if (at_end()) throw ParseError("empty input", pos_);
        Polynomial result;
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            int sign = 1;
            char c = text_[pos_];
            if (c == '+' || c == '-') {
                sign = (c == '-') ? -1 : 1;
                ++pos_;
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            first = false;
            auto [m, coeff] = parse_term();
            result.add_term(m, coeff * sign);
        }
        return result;
    }

   private:
    bool at_end() const { return pos_ >= text_.size(); }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }
    bool letter() const { return !at_end() && std::isalpha(static_cast<unsigned char>(text_[pos_])); }

    void expect_valid_char() const {
        if (at_end()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-' ||
              c == '*' || c == '^' || std::isspace(static_cast<unsigned char>(c))))
            throw ParseError(std::string("unknown character '") + c + "'", pos_);
    }

    Integer parse_uint() {
        std::size_t start = pos_;
        while (digit()) ++pos_;
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    std::pair<Monomial, Integer> parse_term() {
        skip_ws();
        expect_valid_char();
        Integer coeff = 1;
        bool have_coeff = false;
        if (digit()) {
            coeff = parse_uint();
            have_coeff = true;
            skip_ws();
            if (!at_end() && text_[pos_] == '*') {
                ++pos_;
                skip_ws();
                expect_valid_char();
                if (!letter()) throw ParseError("expected variable after '*'", pos_);
            }
        }
        std::vector<Monomial::Entry> factors;
        if (letter()) {
            factors.push_back(parse_factor());
            while (true) {
                skip_ws();
                if (at_end() || text_[pos_] != '*') break;
                ++pos_;
                skip_ws();
                expect_valid_char();
                if (!letter()) throw ParseError("expected variable after '*'", pos_);
                factors.push_back(parse_factor());
            }
        } else if (!have_coeff) {
            expect_valid_char();
            throw ParseError("expected coefficient or variable", pos_);
        }
        skip_ws();
        if (!at_end()) expect_valid_char();
        return {Monomial::from_pairs(std::move(factors)), coeff};
    }

    Monomial::Entry parse_factor() {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        VarId v(text_.substr(start, pos_ - start));
        skip_ws();
        int e = 1;
        if (!at_end() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            int sign = 1;
            if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            }
            expect_valid_char();
            if (!digit()) throw ParseError("expected integer exponent", pos_);
            Integer mag = parse_uint();
            if (mag > 1000000) throw ParseError("exponent too large", pos_);
            e = sign * mag.convert_to<int>();
        }
        return {std::move(v), e};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Free functions

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial result(1);
    Polynomial base = p;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

namespace {

struct PowerCache {
    Polynomial q;
    Polynomial inverse;  // valid only when q is a unit monomial
    bool invertible = false;
    std::map<int, Polynomial> powers;

    explicit PowerCache(Polynomial value) : q(std::move(value)) {
        if (q.size() == 1) {
            const auto& [m, c] = *q.terms().begin();
            if (c == 1 || c == -1) {
                invertible = true;
                inverse = Polynomial::term(m.inverse(), c);
            }
        }
    }

    const Polynomial& get(int e, const VarId& v) {
        auto it = powers.find(e);
        if (it != powers.end()) return it->second;
        Polynomial r;
        if (e >= 0) {
            r = pow(q, static_cast<unsigned>(e));
        } else {
            if (!invertible)
                throw NonInvertibleSubstitution("variable " + v.name() +
                                                " occurs with a negative exponent but its "
                                                "replacement " + q.to_string() +
                                                " is not a unit monomial");
            r = pow(inverse, static_cast<unsigned>(-e));
        }
        return powers.emplace(e, std::move(r)).first->second;
    }
};

}  // namespace

Polynomial substitute(const Polynomial& p, const std::map<VarId, Polynomial>& defs) {
    std::map<VarId, PowerCache> caches;
    for (const auto& [v, q] : defs) caches.emplace(v, PowerCache(q));
    Polynomial result;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> kept;
        Polynomial factor(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = caches.find(v);
            if (it == caches.end()) {
                kept.emplace_back(v, e);
            } else {
                factor = factor * it->second.get(e, v);
            }
        }
        result += shift(factor, Monomial::from_pairs(std::move(kept)));
    }
    return result;
}

Polynomial substitute(const Polynomial& p, const VarId& v, const Polynomial& q) {
    return substitute(p, std::map<VarId, Polynomial>{{v, q}});
}

Polynomial partial(const Polynomial& p, const VarId& v) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m * Monomial::var(v, -1), c * e);
    }
    return r;
}

Rational evaluate(const Polynomial& p, const std::map<VarId, Rational>& assignment) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) throw MissingAssignment("no value for variable " + v.name());
            const Rational& val = it->second;
            if (e < 0 && val == 0)
                throw DivisionByZero("variable " + v.name() + " is zero but has exponent " +
                                     std::to_string(e));
            Rational b = e < 0 ? Rational(1) / val : val;
            for (int k = 0; k < std::abs(e); ++k) t *= b;
        }
        total += t;
    }
    return total;
}

std::map<int, Polynomial> coeff_slices(const Polynomial& p, const VarId& v) {
    std::map<int, Polynomial> slices;
    for (const auto& [m, c] : p.terms()) slices[m.exponent(v)].add_term(m.without(v), c);
    return slices;
}

Polynomial coeff_of(const Polynomial& p, const VarId& v, int i) {
    Polynomial r;
    for (const auto& [m, c] : p.terms())
        if (m.exponent(v) == i) r.add_term(m.without(v), c);
    return r;
}

Polynomial shift(const Polynomial& p, const Monomial& m) {
    if (m.is_one()) return p;
    Polynomial r;
    for (const auto& [t, c] : p.terms()) r.add_term(t * m, c);
    return r;
}

Polynomial divide_exponents(const Polynomial& p, const std::map<VarId, int>& divisors) {
    Polynomial r;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [v, e] : m.exponents()) {
            auto it = divisors.find(v);
            if (it == divisors.end()) {
                entries.emplace_back(v, e);
                continue;
            }
            if (e % it->second != 0)
                throw InternalError("exponent " + std::to_string(e) + " of " + v.name() +
                                    " not divisible by " + std::to_string(it->second));
            entries.emplace_back(v, e / it->second);
        }
        r.add_term(Monomial::from_pairs(std::move(entries)), c);
    }
    return r;
}

bool is_homogeneous(const Polynomial& p, const std::vector<VarId>& vars) {
    bool seen = false;
    int degree = 0;
    for (const auto& [m, c] : p.terms()) {
        int d = 0;
        if (vars.empty()) {
            d = m.total_degree();
        } else {
            for (const auto& v : vars) d += m.exponent(v);
        }
        if (seen && d != degree) return false;
        seen = true;
        degree = d;
    }
    return true;
}

nlohmann::json to_json(const Polynomial& p) {
    auto arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (const auto& [v, e] : m.exponents()) exps[v.name()] = e;
        arr.push_back({{"coeff", c.str()}, {"exps", exps}});
    }
    return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error("polynomial JSON must be an array of terms");
    Polynomial p;
    for (const auto& t : j) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [name, e] : t.at("exps").items()) entries.emplace_back(VarId(name), e.get<int>());
        p.add_term(Monomial::from_pairs(std::move(entries)), Integer(t.at("coeff").get<std::string>()));
    }
    return p;
}

nlohmann::json integer_to_json(const Integer& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

}  // namespace gg
