#pragma once

// Brute-force ground truth. Enumerates labeled permutations directly and
// sums a^cyc(pi); deliberately naive.

#include <mder/errors.hpp>
#include <mder/exactcore.hpp>
#include <mder/shape.hpp>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace mder {

inline constexpr std::size_t default_oracle_cap = 9;

/// Number of cycles of a permutation of {1..m} given as its image list.
inline std::size_t cycle_count(std::span<const std::size_t> perm) {
    const std::size_t m = perm.size();
    std::vector<bool> seen(m, false);
    for (auto v : perm) {
        if (v < 1 || v > m) throw not_a_bijection("image " + std::to_string(v) + " out of range 1.." + std::to_string(m));
        if (seen[v - 1]) throw not_a_bijection("image " + std::to_string(v) + " repeated");
        seen[v - 1] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j] - 1) seen[j] = true;
    }
    return cycles;
}

namespace detail {

inline AlphaPolynomial from_cycle_histogram(const std::vector<Integer>& hist) {
    return AlphaPolynomial(std::vector<Integer>(hist.begin(), hist.end()));
}

struct DerangementSearch {
    std::vector<std::size_t> block_of; // block index per label, 0-based labels
    std::vector<std::size_t> image;
    std::vector<bool> used;
    std::vector<Integer> hist;

    void run(std::size_t pos) {
        const std::size_t m = block_of.size();
        if (pos == m) {
            record();
            return;
        }
        for (std::size_t v = 0; v < m; ++v) {
            if (used[v] || block_of[v] == block_of[pos]) continue;
            used[v] = true;
            image[pos] = v;
            run(pos + 1);
            used[v] = false;
        }
    }

    void record() {
        const std::size_t m = block_of.size();
        std::vector<bool> seen(m, false);
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (seen[i]) continue;
            ++cycles;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = image[j]) {
                seen[j] = true;
                ++len;
            }
            assert(len >= 2);
        }
        ++hist[cycles];
    }
};

} // namespace detail

/// Sum of a^cyc(pi) over permutations of {1..total} that send no element
/// into its own block. Block i occupies a contiguous run of labels.
inline AlphaPolynomial enumerate_derangements(const MultisetShape& shape, std::size_t cap = default_oracle_cap) {
    const std::size_t m = shape.total();
    if (m > cap)
        throw cap_exceeded("shape total " + std::to_string(m) + " exceeds brute-force cap " + std::to_string(cap));
    detail::DerangementSearch s;
    for (std::size_t b = 0; b < shape.blocks.size(); ++b) s.block_of.insert(s.block_of.end(), shape.blocks[b], b);
    s.image.assign(m, 0);
    s.used.assign(m, false);
    s.hist.assign(m + 1, Integer(0));
    s.run(0);
    return detail::from_cycle_histogram(s.hist);
}

/// Sum of a^cyc(pi) over all of S_n.
inline AlphaPolynomial cycle_enumerator_all(std::size_t n, std::size_t cap = default_oracle_cap) {
    if (n > cap) throw cap_exceeded("n = " + std::to_string(n) + " exceeds brute-force cap " + std::to_string(cap));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{1});
    std::vector<Integer> hist(n + 1, Integer(0));
    do {
        ++hist[cycle_count(perm)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return detail::from_cycle_histogram(hist);
}

} // namespace mder
