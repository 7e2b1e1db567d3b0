#pragma once

// Built-in consistency suites run by `mder selftest`.

#include <mder/enumerator.hpp>
#include <mder/exactcore.hpp>
#include <mder/golden.hpp>
#include <mder/oracle.hpp>
#include <mder/recurrence.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace mder {

struct SelftestOptions {
    std::size_t cap = default_oracle_cap;
    // Injection point for the rising factorial used by the cycle identity suite.
    std::function<AlphaPolynomial(std::size_t)> rising = [](std::size_t m) { return rising_factorial(m); };
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double millis = 0;
};

namespace detail {

template <class F>
SuiteResult timed_suite(std::string name, F&& body) {
    SuiteResult r;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.detail = body(r.passed);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace detail

inline SuiteResult selftest_oracle_sweep(const SelftestOptions& opt) {
    return detail::timed_suite("oracle-equivalence", [&](bool& ok) -> std::string {
        const std::size_t bound = std::min<std::size_t>(8, opt.cap);
        std::size_t shapes = 0;
        for (std::size_t total = 1; total <= bound; ++total) {
            for (const auto& shape : compositions(total)) {
                ++shapes;
                if (weighted_derangement_poly(shape) != enumerate_derangements(shape, opt.cap)) {
                    ok = false;
                    return "mismatch at shape [" + to_string(shape) + "]";
                }
            }
        }
        ok = true;
        return std::to_string(shapes) + " shapes, total <= " + std::to_string(bound);
    });
}

inline SuiteResult selftest_cycle_identity(const SelftestOptions& opt) {
    return detail::timed_suite("cycle-identity", [&](bool& ok) -> std::string {
        const std::size_t bound = std::min<std::size_t>(8, opt.cap);
        for (std::size_t n = 0; n <= bound; ++n) {
            if (cycle_enumerator_all(n, opt.cap) != opt.rising(n)) {
                ok = false;
                return "mismatch at n = " + std::to_string(n);
            }
        }
        ok = true;
        return "n <= " + std::to_string(bound);
    });
}

inline SuiteResult selftest_deck(const SelftestOptions&) {
    return detail::timed_suite("deck-of-cards", [&](bool& ok) -> std::string {
        const auto shape = golden::deck_shape();
        const auto poly = weighted_derangement_poly(shape);
        if (poly != golden::deck_polynomial()) {
            ok = false;
            return "polynomial differs from the reference";
        }
        Integer identified = evaluate(poly, Integer(1)) / shape.factorial_product();
        ok = identified.get_str() == golden::deck_identified_count;
        return ok ? "26 coefficients and identified count match" : "identified count " + identified.get_str();
    });
}

inline SuiteResult selftest_recurrence(const SelftestOptions&) {
    return detail::timed_suite("recurrence-cross-validation", [&](bool& ok) -> std::string {
        const std::size_t limit[] = {0, 10, 8};
        for (std::size_t k : {1, 2}) {
            const auto op = builtin_operator(k);
            const auto ext = extend_sequence(op, initial_conditions(k, op.order()), limit[k]);
            const auto direct = fk_direct_range(k, 0, limit[k]);
            if (ext.values != direct) {
                ok = false;
                return "k = " + std::to_string(k) + ": recurrence and direct values differ";
            }
        }
        // classical derangement numbers D(n+1) = n (D(n) + D(n-1))
        const auto f1 = extend_sequence(builtin_operator(1), initial_conditions(1, 2), 10);
        Integer d_prev = 1, d = 0;
        for (std::size_t n = 1; n <= 10; ++n) {
            if (n >= 2) {
                Integer next = Integer(static_cast<unsigned long>(n - 1)) * (d + d_prev);
                d_prev = d;
                d = next;
            }
            if (evaluate(f1.at(n), Integer(1)) != d) {
                ok = false;
                return "derangement number mismatch at n = " + std::to_string(n);
            }
        }
        ok = true;
        return "k=1 n<=10, k=2 n<=8";
    });
}

inline std::vector<SuiteResult> run_selftest(const SelftestOptions& opt = {}) {
    return {selftest_oracle_sweep(opt), selftest_cycle_identity(opt), selftest_deck(opt), selftest_recurrence(opt)};
}

} // namespace mder
