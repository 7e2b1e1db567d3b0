#pragma once

/**
 * @file exactcore.hpp
 * @brief Arbitrary-precision integers, rationals and the polynomial types
 *        used throughout the library.
 *
 * Big integers are GMP's mpz_class. Polynomials are dense coefficient
 * vectors in ascending order with no trailing zeros, so the zero polynomial
 * is the empty vector and equality is structural.
 *
 *   AlphaPolynomial  = DensePolynomial<Integer>          (a polynomial in a)
 *   XPolynomial      = DensePolynomial<AlphaPolynomial>  (a polynomial in x)
 *
 * BivariatePolynomial is a sparse map (deg_n, deg_a) -> coefficient and holds
 * the coefficients of recurrence operators.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace mder {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& v) { return sgn(v) == 0; }

template <class Coeff>
class DensePolynomial;

template <class Coeff>
bool is_zero(const DensePolynomial<Coeff>& p) { return p.is_zero(); }

namespace detail {

inline void add_product(Integer& acc, const Integer& a, const Integer& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

template <class Coeff>
void add_product(DensePolynomial<Coeff>& acc, const DensePolynomial<Coeff>& a,
                 const DensePolynomial<Coeff>& b) {
    acc.add_product(a, b);
}

} // namespace detail

template <class Coeff>
class DensePolynomial {
public:
    using coeff_type = Coeff;

    DensePolynomial() = default;
    explicit DensePolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    DensePolynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static DensePolynomial constant(Coeff c) {
        std::vector<Coeff> v;
        v.push_back(std::move(c));
        return DensePolynomial(std::move(v));
    }

    static DensePolynomial one() {
        if constexpr (std::is_same_v<Coeff, Integer>) return constant(Integer(1));
        else return constant(Coeff::one());
    }

    // c * var^degree
    static DensePolynomial monomial(Coeff c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1);
        v[degree] = std::move(c);
        return DensePolynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

    std::size_t size() const { return coeffs_.size(); }

    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    // Coefficient of var^i; zero past the end.
    const Coeff& operator[](std::size_t i) const {
        static const Coeff zero{};
        return i < coeffs_.size() ? coeffs_[i] : zero;
    }

    const Coeff& leading() const { return coeffs_.back(); }

    bool operator==(const DensePolynomial& o) const { return coeffs_ == o.coeffs_; }

    DensePolynomial& operator+=(const DensePolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    DensePolynomial& operator-=(const DensePolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    DensePolynomial& operator*=(const DensePolynomial& o) {
        *this = *this * o;
        return *this;
    }

    // Multiply every coefficient by a scalar of the coefficient ring.
    DensePolynomial& operator*=(const Coeff& c) {
        if (mder::is_zero(c)) {
            coeffs_.clear();
            return *this;
        }
        for (auto& v : coeffs_) v *= c;
        trim();
        return *this;
    }

    friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
    friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
    friend DensePolynomial operator*(DensePolynomial a, const Coeff& c) { return a *= c; }
    friend DensePolynomial operator*(const Coeff& c, DensePolynomial a) { return a *= c; }

    friend DensePolynomial operator-(DensePolynomial a) {
        for (auto& v : a.coeffs_) v = -v;
        return a;
    }

    friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (mder::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                detail::add_product(out[i + j], a.coeffs_[i], b.coeffs_[j]);
        }
        return DensePolynomial(std::move(out));
    }

    // this += a * b
    void add_product(const DensePolynomial& a, const DensePolynomial& b) {
        if (a.is_zero() || b.is_zero()) return;
        const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
        if (coeffs_.size() < n) coeffs_.resize(n);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (mder::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                detail::add_product(coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
        }
        trim();
    }

private:
    void trim() {
        while (!coeffs_.empty() && mder::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using AlphaPolynomial = DensePolynomial<Integer>;
using XPolynomial = DensePolynomial<AlphaPolynomial>;

// Exact Horner evaluation of p at an integer.
inline Integer evaluate(const AlphaPolynomial& p, const Integer& v) {
    Integer acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

// Value at (a, x) = (alpha, x).
inline Integer evaluate(const XPolynomial& p, const Integer& alpha, const Integer& x) {
    Integer acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc *= x;
        acc += evaluate(*it, alpha);
    }
    return acc;
}

// p * (a + shift), linear time.
inline AlphaPolynomial times_alpha_plus(const AlphaPolynomial& p, const Integer& shift) {
    if (p.is_zero()) return {};
    const auto& c = p.coeffs();
    std::vector<Integer> out(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i + 1] += c[i];
        detail::add_product(out[i], c[i], shift);
    }
    return AlphaPolynomial(std::move(out));
}

// a (a+1) ... (a+m-1); 1 for m = 0.
inline AlphaPolynomial rising_factorial(std::size_t m) {
    AlphaPolynomial r = AlphaPolynomial::one();
    for (std::size_t j = 0; j < m; ++j) r = times_alpha_plus(r, Integer(static_cast<unsigned long>(j)));
    return r;
}

// Gcd of all coefficients; 0 for the zero polynomial.
inline Integer content(const AlphaPolynomial& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// Exact quotient num / den over the integers, or nullopt if den does not
/// divide num in Z[a]. den must be nonzero.
inline std::optional<AlphaPolynomial> divide_exact(const AlphaPolynomial& num, const AlphaPolynomial& den) {
    if (num.is_zero()) return AlphaPolynomial{};
    if (num.degree() < den.degree()) return std::nullopt;
    std::vector<Integer> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dn = d.size() - 1;
    std::vector<Integer> quot(rem.size() - dn);
    for (std::size_t i = quot.size(); i-- > 0;) {
        Integer& top = rem[i + dn];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), d[dn].get_mpz_t())) return std::nullopt;
        mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), d[dn].get_mpz_t());
        for (std::size_t j = 0; j <= dn; ++j)
            mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), d[j].get_mpz_t());
    }
    for (const auto& r : rem)
        if (sgn(r) != 0) return std::nullopt;
    return AlphaPolynomial(std::move(quot));
}

/// Sparse polynomial in (n, a) with integer coefficients.
/// Keys are (degree in n, degree in a); zero coefficients are never stored.
class BivariatePolynomial {
public:
    using Exponent = std::pair<unsigned, unsigned>;
    using Terms = std::map<Exponent, Integer>;

    BivariatePolynomial() = default;
    BivariatePolynomial(long c) { if (c != 0) terms_[{0, 0}] = c; } // NOLINT: implicit from literals

    static BivariatePolynomial n() { return term(1, 1, 0); }
    static BivariatePolynomial a() { return term(1, 0, 1); }

    static BivariatePolynomial term(const Integer& c, unsigned dn, unsigned da) {
        BivariatePolynomial r;
        if (sgn(c) != 0) r.terms_[{dn, da}] = c;
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned degree_n() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.first);
        return d;
    }

    unsigned degree_a() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.second);
        return d;
    }

    // Greatest term in lexicographic order, n before a.
    const Integer& leading_coefficient() const { return terms_.rbegin()->second; }

    Integer coefficient(unsigned dn, unsigned da) const {
        auto it = terms_.find({dn, da});
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(const Integer& c, unsigned dn, unsigned da) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace({dn, da}, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(c, e.first, e.second);
        return *this;
    }

    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(-c, e.first, e.second);
        return *this;
    }

    friend BivariatePolynomial operator+(BivariatePolynomial x, const BivariatePolynomial& y) { return x += y; }
    friend BivariatePolynomial operator-(BivariatePolynomial x, const BivariatePolynomial& y) { return x -= y; }

    friend BivariatePolynomial operator-(BivariatePolynomial x) {
        for (auto& [e, c] : x.terms_) c = -c;
        return x;
    }

    friend BivariatePolynomial operator*(const BivariatePolynomial& x, const BivariatePolynomial& y) {
        BivariatePolynomial r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_)
                r.add_term(Integer(cx * cy), ex.first + ey.first, ex.second + ey.second);
        return r;
    }

    friend BivariatePolynomial pow(BivariatePolynomial base, unsigned e) {
        BivariatePolynomial r = 1;
        while (e--) r = r * base;
        return r;
    }

    // Divide every coefficient by d, which must divide all of them.
    void divide_exact(const Integer& d) {
        for (auto& [e, c] : terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    }

    // Substitute an integer for n, leaving a polynomial in a.
    AlphaPolynomial at_n(const Integer& nv) const {
        std::vector<Integer> out(degree_a() + 1);
        Integer power;
        for (const auto& [e, c] : terms_) {
            mpz_pow_ui(power.get_mpz_t(), nv.get_mpz_t(), e.first);
            detail::add_product(out[e.second], c, power);
        }
        return AlphaPolynomial(std::move(out));
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        return g;
    }

private:
    Terms terms_;
};

// Human-readable rendering, descending powers with explicit signs: "3*a^2 + 6*a".
inline std::string to_string(const AlphaPolynomial& p, const std::string& var = "a") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.size(); i-- > 0;) {
        const Integer& c = p[i];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        const bool unit = mag == 1;
        if (!unit || i == 0) out += mag.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::string to_string(const BivariatePolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto [dn, da] = it->first;
        const Integer& c = it->second;
        Integer mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        std::string mono;
        auto put = [&](const char* v, unsigned d) {
            if (d == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (d > 1) mono += "^" + std::to_string(d);
        };
        put("n", dn);
        put("a", da);
        if (mono.empty()) out += mag.get_str();
        else if (mag == 1) out += mono;
        else out += mag.get_str() + "*" + mono;
    }
    return out;
}

} // namespace mder
