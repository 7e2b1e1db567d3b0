#pragma once

/**
 * @file recurrence.hpp
 * @brief Linear recurrence operators sum_j c_j(n, a) N^j and the
 *        polynomial-valued sequences they annihilate.
 *
 * Operators are kept normalized: integer content 1 and a positive leading
 * coefficient of c_r (greatest term in lexicographic order, n before a).
 * Two normalized operators describing the same relation up to a nonzero
 * integer factor are therefore structurally equal.
 */

#include <mder/enumerator.hpp>
#include <mder/errors.hpp>
#include <mder/exactcore.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mder {

struct RecurrenceOperator {
    std::vector<BivariatePolynomial> coeffs; // c_0 .. c_r; c_j multiplies F(n+j)
    std::size_t valid_from = 0;

    std::size_t order() const { return coeffs.size() - 1; }
    const BivariatePolynomial& leading() const { return coeffs.back(); }

    bool operator==(const RecurrenceOperator&) const = default;
};

/// Divides out the integer content and fixes the sign of c_r's leading term.
/// Throws invalid_operator for order < 1 or a vanishing c_r.
inline RecurrenceOperator normalize(RecurrenceOperator op) {
    if (op.coeffs.size() < 2) throw invalid_operator("operator order must be at least 1");
    if (op.leading().is_zero()) throw invalid_operator("leading coefficient c_r is the zero polynomial");
    Integer g = 0;
    for (const auto& c : op.coeffs) {
        Integer cc = c.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
    }
    if (sgn(op.leading().leading_coefficient()) < 0) g = -g;
    if (g != 1)
        for (auto& c : op.coeffs) c.divide_exact(g);
    return op;
}

inline RecurrenceOperator make_operator(std::vector<BivariatePolynomial> coeffs, std::size_t valid_from = 0) {
    return normalize(RecurrenceOperator{std::move(coeffs), valid_from});
}

/// Contiguous table n -> F(n) for n = start, start+1, ...
struct PolySequence {
    std::size_t k = 0; // block size, 0 when the sequence is not an F_k
    std::size_t start = 0;
    std::vector<AlphaPolynomial> values;

    bool empty() const { return values.empty(); }
    std::size_t size() const { return values.size(); }
    // One past the last index.
    std::size_t end_index() const { return start + values.size(); }
    const AlphaPolynomial& at(std::size_t n) const { return values.at(n - start); }

    bool operator==(const PolySequence&) const = default;
};

/// k = 1:  -a(n+1) F(n) - (n+1) F(n+1) + F(n+2) = 0
/// k = 2:  4a(2n+5)(n+2)(n+1)(a+1)^2 F(n)
///         + 2(n+2)(a+1)(4an^2 + 12an - 4n^2 + 7a - 14n - 10) F(n+1)
///         - 2(n+2)(4an + 4n^2 + 8a + 16n + 17) F(n+2)
///         + (2n+3) F(n+3) = 0
/// Both hold from n = 0 with F_k(0) = 1.
inline RecurrenceOperator builtin_operator(std::size_t k) {
    const auto n = BivariatePolynomial::n();
    const auto a = BivariatePolynomial::a();
    switch (k) {
    case 1:
        return make_operator({-a * (n + 1), -(n + 1), 1}, 0);
    case 2:
        return make_operator(
            {
                4 * a * (2 * n + 5) * (n + 2) * (n + 1) * pow(a + 1, 2),
                2 * (n + 2) * (a + 1) * (4 * a * n * n + 12 * a * n - 4 * n * n + 7 * a - 14 * n - 10),
                -2 * (n + 2) * (4 * a * n + 4 * n * n + 8 * a + 16 * n + 17),
                2 * n + 3,
            },
            0);
    default:
        throw unsupported_k("no built-in recurrence for k = " + std::to_string(k) +
                            "; supply an operator file or run the guesser");
    }
}

/// sum_j c_j(n, a) F(n+j); the caller guarantees n..n+r lie inside seq.
inline AlphaPolynomial apply_operator(const RecurrenceOperator& op, const PolySequence& seq, std::size_t n) {
    const Integer nv(static_cast<unsigned long>(n));
    AlphaPolynomial residual;
    for (std::size_t j = 0; j < op.coeffs.size(); ++j) residual.add_product(op.coeffs[j].at_n(nv), seq.at(n + j));
    return residual;
}

/// Extends seed through index target by solving
///   c_r(n, a) F(n+r) = -sum_{j<r} c_j(n, a) F(n+j)
/// with exact division in Z[a].
inline PolySequence extend_sequence(const RecurrenceOperator& op, const PolySequence& seed, std::size_t target) {
    const std::size_t r = op.order();
    if (seed.size() < r)
        throw window_too_short("seed has " + std::to_string(seed.size()) + " values, operator order is " +
                               std::to_string(r));
    if (seed.end_index() - r < op.valid_from)
        throw window_too_short("seed does not reach the operator's valid_from index " + std::to_string(op.valid_from));
    PolySequence out = seed;
    while (out.end_index() <= target) {
        const std::size_t n = out.end_index() - r;
        const Integer nv(static_cast<unsigned long>(n));
        AlphaPolynomial rhs;
        for (std::size_t j = 0; j < r; ++j) rhs.add_product(op.coeffs[j].at_n(nv), out.at(n + j));
        const AlphaPolynomial lead = op.leading().at_n(nv);
        if (lead.is_zero())
            throw leading_coefficient_zero("c_r vanishes at n = " + std::to_string(n));
        auto q = divide_exact(-rhs, lead);
        if (!q)
            throw inexact_division("division by c_r(" + std::to_string(n) + ", a) = " + to_string(lead) +
                                   " leaves a remainder computing index " + std::to_string(n + r));
        out.values.push_back(std::move(*q));
    }
    return out;
}

/// First index n in the applicable window where the operator fails to
/// annihilate seq, or nullopt when it holds everywhere.
inline std::optional<std::size_t> first_violation(const RecurrenceOperator& op, const PolySequence& seq) {
    const std::size_t r = op.order();
    const std::size_t first = std::max(seq.start, op.valid_from);
    if (seq.end_index() < first + r + 1)
        throw window_too_short("need at least " + std::to_string(r + 1) + " consecutive values from index " +
                               std::to_string(first));
    for (std::size_t n = first; n + r < seq.end_index(); ++n)
        if (!apply_operator(op, seq, n).is_zero()) return n;
    return std::nullopt;
}

inline bool verify_operator(const RecurrenceOperator& op, const PolySequence& seq) {
    return !first_violation(op, seq).has_value();
}

// F_k(0), ..., F_k(r-1) from the integral formula.
inline PolySequence initial_conditions(std::size_t k, std::size_t r) {
    PolySequence s;
    s.k = k;
    s.start = 0;
    s.values = fk_direct_range(k, 0, r - 1);
    return s;
}

inline std::string to_string(const RecurrenceOperator& op) {
    std::string out;
    for (std::size_t j = 0; j < op.coeffs.size(); ++j) {
        if (op.coeffs[j].is_zero()) continue;
        if (!out.empty()) out += "\n+ ";
        out += "(" + to_string(op.coeffs[j]) + ") F(n" + (j ? "+" + std::to_string(j) : std::string()) + ")";
    }
    return out + " = 0   [n >= " + std::to_string(op.valid_from) + "]";
}

} // namespace mder
