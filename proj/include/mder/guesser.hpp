#pragma once

/**
 * @file guesser.hpp
 * @brief Guess-then-verify discovery of recurrence operators.
 *
 * For a candidate size (order r, degree bounds dn in n and da in a) the
 * unknowns are the integer coefficients u[j][p][q] of
 *
 *   c_j(n, a) = sum_{p <= dn, q <= da} u[j][p][q] n^p a^q,   j = 0..r.
 *
 * Requiring sum_j c_j(n, a) F(n+j) = 0 coefficient-wise in a at every window
 * position gives a homogeneous integer system. A kernel vector becomes an
 * operator, which is accepted only if it annihilates the whole sequence,
 * including the held-out tail that did not enter the system.
 *
 * Candidates are visited by increasing order, then dn, then da; the first
 * verified hit is returned.
 */

#include <mder/errors.hpp>
#include <mder/exactcore.hpp>
#include <mder/recurrence.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mder {

struct GuessSpec {
    std::size_t max_order = 1;
    std::size_t max_deg_n = 0;
    std::size_t max_deg_a = 0;
    std::size_t holdout = 5;
};

struct GuessResult {
    std::optional<RecurrenceOperator> op; // empty: not found
    std::size_t order = 0, deg_n = 0, deg_a = 0; // candidate size of the hit
    std::size_t kernel_dimension = 0;            // > 1 means the choice was ambiguous
    std::size_t candidates_tried = 0;

    bool found() const { return op.has_value(); }
};

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

namespace detail {

// Rank of the matrix modulo a 61-bit prime. rank_mod_p <= rank over Q, so a
// full column rank here proves the kernel over Q is trivial.
inline std::size_t rank_mod_prime(const IntegerMatrix& m, std::size_t cols) {
    constexpr std::uint64_t p = 2305843009213693951ULL; // 2^61 - 1
    auto mul = [](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto inv = [&](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    };
    std::vector<std::vector<std::uint64_t>> a(m.size(), std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = mpz_fdiv_ui(m[i][j].get_mpz_t(), p);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[rank], a[piv]);
        const std::uint64_t iv = inv(a[rank][c]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            const std::uint64_t f = mul(a[i][c], iv);
            for (std::size_t j = c; j < cols; ++j) a[i][j] = (a[i][j] + p - mul(f, a[rank][j])) % p;
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Canonical kernel basis of an integer matrix with `cols` columns, by
/// fraction-free (Bareiss) elimination. The pivot in each column is the
/// nonzero entry of smallest bit length, ties to the lowest row. One vector
/// per free column, ordered by increasing free column, so the first vector
/// has the most trailing zeros. Vectors are primitive integer vectors.
inline std::vector<std::vector<Integer>> kernel_basis(IntegerMatrix m, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    Integer prev = 1;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t best = m.size();
        std::size_t best_bits = 0;
        for (std::size_t i = row; i < m.size(); ++i) {
            if (sgn(m[i][c]) == 0) continue;
            const std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
            if (best == m.size() || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == m.size()) continue;
        std::swap(m[row], m[best]);
        const Integer& piv = m[row][c];
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            Integer& head = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer& e = m[i][j];
                e *= piv;
                mpz_submul(e.get_mpz_t(), head.get_mpz_t(), m[row][j].get_mpz_t());
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            head = 0;
        }
        prev = piv;
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        ++row;
    }

    std::vector<std::vector<Integer>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[f] = 1;
        for (std::size_t r = pivot_cols.size(); r-- > 0;) {
            const std::size_t pc = pivot_cols[r];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (sgn(v[j]) != 0) s += Rational(m[r][j]) * v[j];
            v[pc] = -s / Rational(m[r][pc]);
        }
        Integer den = 1, g = 0;
        for (auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> iv(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            iv[j] = v[j].get_num() * (den / v[j].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
        }
        for (auto& x : iv) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        basis.push_back(std::move(iv));
    }
    return basis;
}

/// One nonzero kernel vector of a rational matrix, or nullopt when the kernel
/// is trivial. Rows are scaled to integers before elimination.
inline std::optional<std::vector<Rational>> nullspace_vector(const RationalMatrix& system, std::size_t cols) {
    IntegerMatrix m;
    m.reserve(system.size());
    for (const auto& row : system) {
        if (row.size() != cols) throw std::invalid_argument("nullspace_vector: ragged matrix");
        Integer den = 1;
        for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<Integer> irow(cols);
        for (std::size_t j = 0; j < cols; ++j) irow[j] = row[j].get_num() * (den / row[j].get_den());
        m.push_back(std::move(irow));
    }
    auto basis = kernel_basis(std::move(m), cols);
    if (basis.empty()) return std::nullopt;
    std::vector<Rational> out;
    out.reserve(cols);
    for (const auto& x : basis.front()) out.emplace_back(x);
    return out;
}

inline std::optional<std::vector<Rational>> nullspace_vector(const RationalMatrix& system) {
    return nullspace_vector(system, system.empty() ? 0 : system.front().size());
}

namespace detail {

struct CandidateSystem {
    IntegerMatrix rows;
    std::size_t unknowns = 0;
    std::size_t equations = 0; // counted before dropping all-zero rows
};

inline CandidateSystem build_system(const PolySequence& seq, std::size_t fit_end, std::size_t order,
                                    std::size_t dn, std::size_t da) {
    CandidateSystem sys;
    sys.unknowns = (order + 1) * (dn + 1) * (da + 1);
    auto col = [&](std::size_t j, std::size_t p, std::size_t q) { return (j * (dn + 1) + p) * (da + 1) + q; };
    for (std::size_t n = seq.start; n + order < fit_end; ++n) {
        std::ptrdiff_t top = -1;
        for (std::size_t j = 0; j <= order; ++j) top = std::max(top, seq.at(n + j).degree());
        if (top < 0) continue;
        const std::size_t rows_here = static_cast<std::size_t>(top) + da + 1;
        sys.equations += rows_here;
        std::vector<Integer> npow(dn + 1);
        for (std::size_t p = 0; p <= dn; ++p) mpz_ui_pow_ui(npow[p].get_mpz_t(), n, p);
        for (std::size_t e = 0; e < rows_here; ++e) {
            std::vector<Integer> row(sys.unknowns);
            bool nonzero = false;
            for (std::size_t j = 0; j <= order; ++j) {
                const AlphaPolynomial& f = seq.at(n + j);
                for (std::size_t q = 0; q <= da && q <= e; ++q) {
                    const Integer& fc = f[e - q];
                    if (sgn(fc) == 0) continue;
                    for (std::size_t p = 0; p <= dn; ++p) {
                        row[col(j, p, q)] = fc * npow[p];
                        nonzero = true;
                    }
                }
            }
            if (nonzero) sys.rows.push_back(std::move(row));
        }
    }
    return sys;
}

inline RecurrenceOperator operator_from_vector(const std::vector<Integer>& v, std::size_t order, std::size_t dn,
                                               std::size_t da, std::size_t valid_from) {
    std::vector<BivariatePolynomial> coeffs(order + 1);
    std::size_t idx = 0;
    for (std::size_t j = 0; j <= order; ++j)
        for (std::size_t p = 0; p <= dn; ++p)
            for (std::size_t q = 0; q <= da; ++q)
                coeffs[j].add_term(v[idx++], static_cast<unsigned>(p), static_cast<unsigned>(q));
    return RecurrenceOperator{std::move(coeffs), valid_from};
}

} // namespace detail

/// Smallest operator within the given bounds annihilating seq, or an empty
/// result. Throws insufficient_terms when no candidate size has at least as
/// many equations as unknowns in the fitting window.
inline GuessResult guess_operator(const PolySequence& seq, const GuessSpec& spec) {
    if (spec.holdout < 1) throw std::invalid_argument("guess_operator: holdout must be at least 1");
    if (spec.max_order < 1) throw std::invalid_argument("guess_operator: max_order must be at least 1");
    GuessResult result;
    if (seq.size() <= spec.holdout)
        throw insufficient_terms("sequence has " + std::to_string(seq.size()) + " terms, holdout alone needs " +
                                 std::to_string(spec.holdout + 1));
    const std::size_t fit_end = seq.end_index() - spec.holdout;
    bool any_feasible = false;
    for (std::size_t order = 1; order <= spec.max_order; ++order) {
        for (std::size_t dn = 0; dn <= spec.max_deg_n; ++dn) {
            for (std::size_t da = 0; da <= spec.max_deg_a; ++da) {
                auto sys = detail::build_system(seq, fit_end, order, dn, da);
                if (sys.equations < sys.unknowns) continue;
                any_feasible = true;
                ++result.candidates_tried;
                if (detail::rank_mod_prime(sys.rows, sys.unknowns) == sys.unknowns) continue;
                auto basis = kernel_basis(std::move(sys.rows), sys.unknowns);
                for (const auto& v : basis) {
                    auto raw = detail::operator_from_vector(v, order, dn, da, seq.start);
                    if (raw.leading().is_zero()) continue;
                    auto op = normalize(std::move(raw));
                    if (!verify_operator(op, seq)) continue;
                    result.op = std::move(op);
                    result.order = order;
                    result.deg_n = dn;
                    result.deg_a = da;
                    result.kernel_dimension = basis.size();
                    return result;
                }
            }
        }
    }
    if (!any_feasible)
        throw insufficient_terms("no candidate within the bounds has enough equations; supply more terms");
    return result;
}

} // namespace mder
