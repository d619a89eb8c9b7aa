#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nbodymat/errors.hpp"
#include "nbodymat/rational.hpp"
#include "nbodymat/scalar.hpp"

namespace nbodymat {

inline constexpr std::size_t kMaxVars = 64;
inline constexpr unsigned kMaxExponent = 255;

/// Ordered list of uniquely named variables.
class VarTable {
public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.size() > kMaxVars)
            throw ResourceCapExceeded("at most " + std::to_string(kMaxVars) + " polynomial variables are supported");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw DomainError("empty variable name");
            if (!index_.emplace(names_[i], i).second) throw DomainError("duplicate variable name '" + names_[i] + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_var_table(std::vector<std::string> names) {
    return std::make_shared<const VarTable>(std::move(names));
}

/// Exponent vector, one byte per variable.
class Monomial {
public:
    Monomial() { exps_.fill(0); }

    unsigned operator[](std::size_t v) const { return exps_[v]; }
    unsigned degree() const { return degree_; }

    void set(std::size_t v, unsigned e) {
        if (v >= kMaxVars) throw DomainError("variable index out of range");
        if (e > kMaxExponent) throw ResourceCapExceeded("exponent exceeds " + std::to_string(kMaxExponent));
        degree_ = static_cast<std::uint16_t>(degree_ - exps_[v] + e);
        exps_[v] = static_cast<std::uint8_t>(e);
    }

    static Monomial variable(std::size_t v, unsigned e = 1) {
        Monomial m;
        m.set(v, e);
        return m;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        unsigned overflow = 0;
        for (std::size_t v = 0; v < kMaxVars; ++v) {
            const unsigned s = static_cast<unsigned>(a.exps_[v]) + b.exps_[v];
            overflow |= s >> 8;
            out.exps_[v] = static_cast<std::uint8_t>(s);
        }
        if (overflow) throw ResourceCapExceeded("exponent exceeds " + std::to_string(kMaxExponent));
        out.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
        return out;
    }

    /// True iff this monomial divides `m`.
    bool divides(const Monomial& m) const {
        bool ok = true;
        for (std::size_t v = 0; v < kMaxVars; ++v) ok &= exps_[v] <= m.exps_[v];
        return ok;
    }

    /// m / d, assuming d divides m.
    friend Monomial operator/(const Monomial& m, const Monomial& d) {
        Monomial out;
        for (std::size_t v = 0; v < kMaxVars; ++v) out.exps_[v] = static_cast<std::uint8_t>(m.exps_[v] - d.exps_[v]);
        out.degree_ = static_cast<std::uint16_t>(m.degree_ - d.degree_);
        return out;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.exps_ == b.exps_;
    }

    /// Graded lexicographic order: total degree first, then lex with
    /// variable 0 most significant.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
        const int c = std::memcmp(a.exps_.data(), b.exps_.data(), kMaxVars);
        return c <=> 0;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (std::size_t w = 0; w < kMaxVars / 8; ++w) {
            std::uint64_t word;
            std::memcpy(&word, exps_.data() + 8 * w, 8);
            h ^= word + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 31));
    }

private:
    std::array<std::uint8_t, kMaxVars> exps_;
    std::uint16_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Exact multivariate polynomial with rational coefficients.
///
/// Terms live in a hash map with no stored zeros, so equality is
/// structural. A polynomial built from a bare constant has no variable
/// table and adopts the table of whatever it is combined with.
class SparsePoly {
public:
    using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;
    using Term = std::pair<Monomial, Rational>;

    SparsePoly() = default;
    SparsePoly(int c) : SparsePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    SparsePoly(const Rational& c) {                 // NOLINT(google-explicit-constructor)
        if (sgn(c) != 0) terms_.emplace(Monomial(), c);
    }
    explicit SparsePoly(VarTablePtr vars, const Rational& c = Rational(0)) : SparsePoly(c) { vars_ = std::move(vars); }

    static SparsePoly variable(const VarTablePtr& vars, std::size_t index) {
        if (!vars || index >= vars->size()) throw DomainError("variable index out of range");
        SparsePoly p(vars);
        p.terms_.emplace(Monomial::variable(index), Rational(1));
        return p;
    }

    static SparsePoly variable(const VarTablePtr& vars, std::string_view name) {
        auto idx = vars ? vars->index(name) : std::nullopt;
        if (!idx) throw DomainError("unknown variable '" + std::string(name) + "'");
        return variable(vars, *idx);
    }

    static SparsePoly monomial(const VarTablePtr& vars, const Monomial& m, const Rational& c) {
        SparsePoly p(vars);
        if (sgn(c) != 0) p.terms_.emplace(m, c);
        return p;
    }

    const VarTablePtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

    Rational constant_value() const {
        auto it = terms_.find(Monomial());
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    /// Degree in one variable; -1 for the zero polynomial.
    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
        return d;
    }

    /// Degree restricted to a subset of variables; -1 for zero.
    int degree_in(const std::vector<std::size_t>& var_set) const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (auto v : var_set) s += static_cast<int>(m[v]);
            d = std::max(d, s);
        }
        return d;
    }

    /// True iff every term has the same degree in `var_set`.
    bool is_homogeneous_in(const std::vector<std::size_t>& var_set) const {
        std::optional<int> deg;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (auto v : var_set) s += static_cast<int>(m[v]);
            if (deg && *deg != s) return false;
            deg = s;
        }
        return true;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Terms in descending graded lexicographic order.
    std::vector<Term> sorted_terms() const {
        std::vector<Term> out(terms_.begin(), terms_.end());
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first > b.first; });
        return out;
    }

    Term leading_term() const {
        if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
        auto best = terms_.begin();
        for (auto it = terms_.begin(); it != terms_.end(); ++it)
            if (it->first > best->first) best = it;
        return *best;
    }

    SparsePoly operator-() const {
        SparsePoly out = *this;
        for (auto& [m, c] : out.terms_) c = -c;
        return out;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        adopt_vars(o);
        for (const auto& [m, c] : o.terms_) accumulate(m, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& o) {
        adopt_vars(o);
        for (const auto& [m, c] : o.terms_) accumulate(m, -c);
        return *this;
    }

    SparsePoly& operator*=(const SparsePoly& o) {
        *this = *this * o;
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly out(merged_vars(a, b));
        if (a.terms_.empty() || b.terms_.empty()) return out;
        const SparsePoly& small = a.size() <= b.size() ? a : b;
        const SparsePoly& large = a.size() <= b.size() ? b : a;
        if (small.size() == 1 && small.terms_.begin()->first.degree() == 0) {
            out.terms_ = large.terms_;
            const Rational& s = small.terms_.begin()->second;
            for (auto& [m, c] : out.terms_) c *= s;
            return out;
        }
        out.terms_.reserve(std::min(a.size() * b.size(), std::size_t{1} << 22));
        Rational prod;
        for (const auto& [ma, ca] : small.terms_) {
            for (const auto& [mb, cb] : large.terms_) {
                mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
                auto [it, inserted] = out.terms_.try_emplace(ma * mb);
                if (inserted) it->second = prod;
                else it->second += prod;
            }
        }
        out.drop_zeros();
        return out;
    }

    SparsePoly scaled(const Rational& s) const {
        if (sgn(s) == 0) return SparsePoly(vars_);
        SparsePoly out = *this;
        for (auto& [m, c] : out.terms_) c *= s;
        return out;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.vars_ && b.vars_ && a.vars_ != b.vars_ && !(*a.vars_ == *b.vars_)) return false;
        return a.terms_ == b.terms_;
    }

    /// Exact value at a point given per variable index.
    Rational evaluate(const std::vector<Rational>& values) const {
        Rational acc(0);
        Rational term;
        for (const auto& [m, c] : terms_) {
            term = c;
            for (std::size_t v = 0; v < kMaxVars; ++v) {
                const unsigned e = m[v];
                if (e == 0) continue;
                if (v >= values.size())
                    throw DomainError("no value supplied for variable " + var_name(v));
                Rational pw;
                mpz_pow_ui(mpq_numref(pw.get_mpq_t()), mpq_numref(values[v].get_mpq_t()), e);
                mpz_pow_ui(mpq_denref(pw.get_mpq_t()), mpq_denref(values[v].get_mpq_t()), e);
                term *= pw;
            }
            acc += term;
        }
        return acc;
    }

    /// Exact value at a point given by variable name; every variable that
    /// occurs in the polynomial must be assigned.
    Rational evaluate(const std::map<std::string, Rational>& assignment) const {
        std::vector<Rational> values(vars_ ? vars_->size() : 0, Rational(0));
        const auto used = used_variables();
        for (auto v : used) {
            auto it = assignment.find(vars_->name(v));
            if (it == assignment.end()) throw DomainError("no value supplied for variable " + vars_->name(v));
            values[v] = it->second;
        }
        return evaluate(values);
    }

    /// Indices of variables that occur with nonzero exponent.
    std::vector<std::size_t> used_variables() const {
        std::array<bool, kMaxVars> seen{};
        for (const auto& [m, c] : terms_)
            for (std::size_t v = 0; v < kMaxVars; ++v)
                if (m[v]) seen[v] = true;
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < kMaxVars; ++v)
            if (seen[v]) out.push_back(v);
        return out;
    }

    /// Replace variable v by images[v] (a polynomial over `target`); variables
    /// with no image are kept and must exist by name in `target`.
    SparsePoly substitute(const std::vector<std::optional<SparsePoly>>& images, const VarTablePtr& target) const {
        SparsePoly out(target);
        std::map<std::pair<std::size_t, unsigned>, SparsePoly> powers;
        auto image = [&](std::size_t v) -> SparsePoly {
            if (v < images.size() && images[v]) return *images[v];
            return SparsePoly::variable(target, var_name(v));
        };
        auto power = [&](std::size_t v, unsigned e) -> const SparsePoly& {
            auto key = std::make_pair(v, e);
            auto it = powers.find(key);
            if (it != powers.end()) return it->second;
            SparsePoly p = pow(image(v), e);
            return powers.emplace(key, std::move(p)).first->second;
        };
        for (const auto& [m, c] : terms_) {
            SparsePoly term(target, c);
            for (std::size_t v = 0; v < kMaxVars; ++v)
                if (m[v]) term = term * power(v, m[v]);
            out += term;
        }
        return out;
    }

    /// "c * x^2 * y + c2 * z" with monomials in descending graded lex order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : sorted_terms()) {
            if (!first) out += " + ";
            first = false;
            out += c.get_str();
            for (std::size_t v = 0; v < kMaxVars; ++v) {
                if (!m[v]) continue;
                out += " * ";
                out += var_name(v);
                if (m[v] > 1) out += "^" + std::to_string(m[v]);
            }
        }
        return out;
    }

    /// Inverse of to_string() over the given table.
    static SparsePoly parse(std::string_view text, const VarTablePtr& vars) {
        SparsePoly out(vars);
        auto trim = [](std::string_view s) {
            while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
            while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        if (text == "0") return out;
        auto split = [](std::string_view s, std::string_view sep) {
            std::vector<std::string_view> parts;
            std::size_t pos = 0;
            while (true) {
                auto next = s.find(sep, pos);
                parts.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
                if (next == std::string_view::npos) break;
                pos = next + sep.size();
            }
            return parts;
        };
        for (auto term_text : split(text, " + ")) {
            term_text = trim(term_text);
            if (term_text.empty()) throw ParseError("empty term in polynomial text");
            Rational coeff(1);
            Monomial mono;
            bool first = true;
            for (auto factor : split(term_text, " * ")) {
                factor = trim(factor);
                if (first) {
                    first = false;
                    const char c0 = factor.empty() ? '\0' : factor.front();
                    if ((c0 >= '0' && c0 <= '9') || c0 == '-' || c0 == '+') {
                        coeff = parse_rational(factor);
                        continue;
                    }
                }
                unsigned e = 1;
                std::string_view name = factor;
                if (auto caret = factor.find('^'); caret != std::string_view::npos) {
                    name = factor.substr(0, caret);
                    auto ez = detail::parse_integer(factor.substr(caret + 1));
                    if (ez < 0 || ez > kMaxExponent) throw ParseError("bad exponent in '" + std::string(factor) + "'");
                    e = static_cast<unsigned>(ez.get_ui());
                }
                auto idx = vars ? vars->index(name) : std::nullopt;
                if (!idx) throw ParseError("unknown variable '" + std::string(name) + "' in polynomial text");
                mono.set(*idx, mono[*idx] + e);
            }
            out.accumulate(mono, coeff);
        }
        return out;
    }

    friend SparsePoly pow(const SparsePoly& base, unsigned e) {
        SparsePoly result(base.vars_, Rational(1));
        SparsePoly b = base;
        while (e) {
            if (e & 1u) result = result * b;
            e >>= 1u;
            if (e) b = b * b;
        }
        return result;
    }

    std::string var_name(std::size_t v) const {
        if (vars_ && v < vars_->size()) return vars_->name(v);
        return "x" + std::to_string(v);
    }

    /// Term-map insertion used by builders; zero results are removed.
    void accumulate(const Monomial& m, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

private:
    static VarTablePtr merged_vars(const SparsePoly& a, const SparsePoly& b) {
        if (!a.vars_) return b.vars_;
        if (!b.vars_ || a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.vars_;
        throw VarTableMismatch("polynomials over different variable tables");
    }

    void adopt_vars(const SparsePoly& o) { vars_ = merged_vars(*this, o); }

    void drop_zeros() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (sgn(it->second) == 0) it = terms_.erase(it);
            else ++it;
        }
    }

    VarTablePtr vars_;
    TermMap terms_;
};

/// Multivariate division by `den` under graded lex order. Returns the
/// quotient when den * q == num exactly (re-checked by one multiplication),
/// std::nullopt otherwise.
inline std::optional<SparsePoly> exact_divide(const SparsePoly& num, const SparsePoly& den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    SparsePoly quotient(num.vars() ? num.vars() : den.vars());
    if (num.is_zero()) return quotient;

    const auto [lead_m, lead_c] = den.leading_term();
    if (den.size() == 1) {
        for (const auto& [m, c] : num.terms()) {
            if (!lead_m.divides(m)) return std::nullopt;
            quotient.accumulate(m / lead_m, Rational(c / lead_c));
        }
        return quotient;
    }

    std::vector<SparsePoly::Term> den_tail;
    for (const auto& t : den.sorted_terms())
        if (!(t.first == lead_m)) den_tail.push_back(t);

    std::map<Monomial, Rational, std::greater<>> rem(num.terms().begin(), num.terms().end());
    Rational qc;
    Rational prod;
    while (!rem.empty()) {
        auto top = rem.begin();
        if (!lead_m.divides(top->first)) return std::nullopt;
        const Monomial qm = top->first / lead_m;
        qc = top->second / lead_c;
        rem.erase(top);
        for (const auto& [m, c] : den_tail) {
            mpq_mul(prod.get_mpq_t(), qc.get_mpq_t(), c.get_mpq_t());
            auto [it, inserted] = rem.try_emplace(qm * m);
            if (inserted) {
                it->second = -prod;
            } else {
                it->second -= prod;
                if (sgn(it->second) == 0) rem.erase(it);
            }
        }
        quotient.accumulate(qm, qc);
    }
    if (!(quotient * den == num)) return std::nullopt;
    return quotient;
}

/// Like exact_divide, but a non-exact division is reported as an error.
inline SparsePoly divide_exactly(const SparsePoly& num, const SparsePoly& den) {
    auto q = exact_divide(num, den);
    if (!q) throw VerificationFailure("polynomial division is not exact");
    return std::move(*q);
}

/// gcd of the coefficients after clearing denominators; 0 for the zero polynomial.
inline Integer content(const SparsePoly& p) {
    Integer den_lcm(1);
    for (const auto& [m, c] : p.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    Integer g(0);
    for (const auto& [m, c] : p.terms()) {
        Integer v = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

template <>
struct ScalarTraits<SparsePoly> {
    static constexpr bool is_exact = true;
    static constexpr bool is_ordered = false;
    static bool is_zero(const SparsePoly& p) { return p.is_zero(); }
    static SparsePoly exact_div(const SparsePoly& a, const SparsePoly& b) { return divide_exactly(a, b); }
    static double to_double(const SparsePoly& p) {
        if (!p.is_constant()) throw DomainError("non-constant polynomial has no numeric value");
        return p.constant_value().get_d();
    }
};

}  // namespace nbodymat
