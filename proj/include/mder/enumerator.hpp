#pragma once

/**
 * @file enumerator.hpp
 * @brief Cycle-weighted enumerator of multiset derangements via the
 *        Laguerre-integral formula.
 *
 * The integral against x^(a-1) e^(-x) / Gamma(a) is the linear functional
 * x^m -> a(a+1)...(a+m-1). Applying it to the product of scaled Laguerre
 * polynomials and fixing the sign by (-1)^(sum k_i) gives
 *
 *   A(k_1,...,k_n)(a) = sum over derangements pi of a^cyc(pi)
 *
 * for labeled elements. Evaluating at a = 1 gives the plain count.
 */

#include <mder/exactcore.hpp>
#include <mder/laguerre.hpp>
#include <mder/shape.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mder {

// x^m -> (a)_m, evaluated as p_0 + a (p_1 + (a+1) (p_2 + (a+2) (...))).
inline AlphaPolynomial moment_functional(const XPolynomial& p) {
    if (p.is_zero()) return {};
    AlphaPolynomial acc = p.leading();
    for (std::size_t m = p.size() - 1; m-- > 0;) {
        acc = times_alpha_plus(acc, Integer(static_cast<unsigned long>(m)));
        acc += p[m];
    }
    return acc;
}

inline AlphaPolynomial weighted_derangement_poly(const MultisetShape& shape) {
    const MultisetShape blocks = shape.without_zeros();
    AlphaPolynomial r = moment_functional(laguerre_product(blocks.blocks));
    return blocks.total() % 2 == 1 ? -r : r;
}

// Number of labeled derangements; the value of the weighted polynomial at a = 1.
inline Integer count_derangements(const MultisetShape& shape) {
    return evaluate(weighted_derangement_poly(shape), Integer(1));
}

// Count with each block's elements identified (divided by prod k_i!).
inline Integer count_identified_derangements(const MultisetShape& shape) {
    Integer labeled = count_derangements(shape);
    Integer q;
    mpz_divexact(q.get_mpz_t(), labeled.get_mpz_t(), shape.factorial_product().get_mpz_t());
    return q;
}

// F_k(n) = A(k, ..., k) with n blocks.
inline AlphaPolynomial fk_value(std::size_t k, std::size_t n) {
    if (k == 0) throw std::invalid_argument("fk_value: k must be positive");
    return weighted_derangement_poly(MultisetShape::repeated(k, n));
}

/// F_k(first..last) by direct evaluation of the integral formula, reusing
/// the running power of the Laguerre factor between consecutive n.
inline std::vector<AlphaPolynomial> fk_direct_range(std::size_t k, std::size_t first, std::size_t last) {
    if (k == 0) throw std::invalid_argument("fk_direct_range: k must be positive");
    std::vector<AlphaPolynomial> out;
    if (last < first) return out;
    out.reserve(last - first + 1);
    const XPolynomial& factor = LaguerreTable::shared().get(k);
    XPolynomial power = XPolynomial::one();
    for (std::size_t n = 0; n <= last; ++n) {
        if (n > 0) power = power * factor;
        if (n < first) continue;
        AlphaPolynomial v = moment_functional(power);
        out.push_back((k * n) % 2 == 1 ? -v : v);
    }
    return out;
}

} // namespace mder
