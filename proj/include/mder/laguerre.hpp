#pragma once

// Generalized Laguerre polynomials with parameter (a - 1), scaled by k! so
// that every coefficient is an integer polynomial in a:
//
//   k! L_k^{(a-1)}(x) = sum_{i=0}^{k} (-1)^i C(k,i) (a+i)(a+i+1)...(a+k-1) x^i

#include <mder/exactcore.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <span>
#include <vector>

namespace mder {

inline XPolynomial scaled_laguerre(std::size_t k) {
    std::vector<AlphaPolynomial> coeffs(k + 1);
    AlphaPolynomial tail = AlphaPolynomial::one(); // prod_{j=i}^{k-1} (a+j)
    Integer binom;
    for (std::size_t i = k + 1; i-- > 0;) {
        if (i < k) tail = times_alpha_plus(tail, Integer(static_cast<unsigned long>(i)));
        mpz_bin_uiui(binom.get_mpz_t(), k, i);
        if (i % 2 == 1) binom = -binom;
        coeffs[i] = tail * binom;
    }
    return XPolynomial(std::move(coeffs));
}

/// Memo of scaled_laguerre by k. Safe for concurrent use.
class LaguerreTable {
public:
    const XPolynomial& get(std::size_t k) {
        std::lock_guard lock(mutex_);
        auto it = table_.find(k);
        if (it == table_.end()) it = table_.emplace(k, scaled_laguerre(k)).first;
        return it->second; // map nodes are stable
    }

    static LaguerreTable& shared() {
        static LaguerreTable instance;
        return instance;
    }

private:
    std::mutex mutex_;
    std::map<std::size_t, XPolynomial> table_;
};

// Product of scaled_laguerre(k_i) over the blocks, multiplied in
// nondecreasing k.
inline XPolynomial laguerre_product(std::span<const std::size_t> blocks) {
    std::vector<std::size_t> sorted(blocks.begin(), blocks.end());
    std::sort(sorted.begin(), sorted.end());
    auto& table = LaguerreTable::shared();
    XPolynomial product = XPolynomial::one();
    for (std::size_t k : sorted) {
        if (k == 0) continue;
        product = product * table.get(k);
    }
    return product;
}

} // namespace mder
