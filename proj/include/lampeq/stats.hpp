#pragma once

// Generic-case behavior of sigma_x on random freely reduced words.  The
// sampler of word.hpp is the three-state chain on {x^-1, y, x} (y merging
// a^±, t^±) with transition matrix
//   [ 1/5  4/5   0  ]
//   [ 1/5  3/5  1/5 ]
//   [  0   4/5  1/5 ]
// and initial distribution (1/6, 2/3, 1/6), which is also its stationary
// distribution.  The chain checks run in exact rational arithmetic; the
// sigma_x(w) = 0 frequency is measured by Monte Carlo sampling or, for small
// lengths, by exact dynamic programming over the sphere.

#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "lampeq/word.hpp"

namespace lampeq {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(Rational a, Rational b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Rational operator*(Rational a, Rational b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(Rational a, Rational b) {
        return a.num * b.den <=> b.num * a.den;
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ChainSpec {
    // States in order x^-1, y, x.
    static std::array<std::array<Rational, 3>, 3> transition_matrix() {
        const Rational f15(1, 5), f35(3, 5), f45(4, 5), z(0);
        return {{{f15, f45, z}, {f15, f35, f15}, {z, f45, f15}}};
    }

    static std::array<Rational, 3> initial_distribution() {
        return {Rational(1, 6), Rational(2, 3), Rational(1, 6)};
    }
};

/// Max-norm of pi*M - pi in exact arithmetic (as a nonnegative rational).
inline Rational stationary_residual(const std::array<Rational, 3>& pi) {
    const auto M = ChainSpec::transition_matrix();
    Rational worst(0);
    for (int j = 0; j < 3; ++j) {
        Rational s(0);
        for (int i = 0; i < 3; ++i) s = s + pi[i] * M[i][j];
        Rational diff = s - pi[j];
        if (diff < Rational(0)) diff = Rational(0) - diff;
        if (worst < diff) worst = diff;
    }
    return worst;
}

/// Residual of the chain's own initial distribution; exactly zero.
inline Rational stationary_check() {
    return stationary_residual(ChainSpec::initial_distribution());
}

/// Monte Carlo estimate of P[sigma_x(w) = 0] over the sphere of radius m,
/// sampling with the same no-immediate-cancellation walk as random_word.
/// Deterministic for a fixed seed.
inline double sigma_zero_fraction(std::int64_t m, std::int64_t trials,
                                  std::uint64_t seed) {
    if (m < 1 || trials < 1)
        throw std::invalid_argument("sigma_zero_fraction: m and trials must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> first(0, 5);
    std::uniform_int_distribution<int> next(0, 4);
    // Letters indexed as in random_word: a, a^-1, t, t^-1, x, x^-1.
    std::int64_t zeros = 0;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        std::int64_t sigma = 0;
        int prev = first(rng);
        sigma += prev == 4 ? 1 : prev == 5 ? -1 : 0;
        for (std::int64_t k = 1; k < m; ++k) {
            int banned = prev ^ 1;
            int r = next(rng);
            if (r >= banned) ++r;
            sigma += r == 4 ? 1 : r == 5 ? -1 : 0;
            prev = r;
        }
        if (sigma == 0) ++zeros;
    }
    return static_cast<double>(zeros) / static_cast<double>(trials);
}

/// Exact P[sigma_x(w) = 0] over the sphere of radius m, by dynamic
/// programming on (last letter, sigma_x); |sphere| = 6 * 5^(m-1) must fit a
/// signed 64-bit count, so m <= 25.
inline Rational sigma_zero_exact(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("sigma_zero_exact: m must be >= 1");
    if (m > 25) throw capacity_error("sigma_zero_exact: sphere too large");
    const std::int64_t width = 2 * m + 1; // sigma offsets -m..m
    // counts[letter][sigma + m]
    std::vector<std::array<std::int64_t, 6>> counts(
        static_cast<std::size_t>(width));
    auto sig = [](int letter) { return letter == 4 ? 1 : letter == 5 ? -1 : 0; };
    for (int l = 0; l < 6; ++l)
        counts[static_cast<std::size_t>(m + sig(l))][l] += 1;
    for (std::int64_t k = 1; k < m; ++k) {
        std::vector<std::array<std::int64_t, 6>> nxt(
            static_cast<std::size_t>(width));
        for (std::int64_t s = 0; s < width; ++s)
            for (int l = 0; l < 6; ++l) {
                std::int64_t c = counts[static_cast<std::size_t>(s)][l];
                if (!c) continue;
                for (int nl = 0; nl < 6; ++nl) {
                    if (nl == (l ^ 1)) continue; // no immediate cancellation
                    std::int64_t ns = s + sig(nl);
                    if (ns < 0 || ns >= width) continue;
                    nxt[static_cast<std::size_t>(ns)][nl] += c;
                }
            }
        counts = std::move(nxt);
    }
    std::int64_t zeros = 0, total = 0;
    for (std::int64_t s = 0; s < width; ++s)
        for (int l = 0; l < 6; ++l) {
            total += counts[static_cast<std::size_t>(s)][l];
            if (s == m) zeros += counts[static_cast<std::size_t>(s)][l];
        }
    return Rational(zeros, total);
}

} // namespace lampeq
