#pragma once

// Shared random generators for the property tests.

#include <cstdint>
#include <random>

#include "lampeq/gf2poly.hpp"
#include "lampeq/parametric.hpp"

namespace testutil {

// Random canonical polynomial with size(f) <= max_size (may be zero).
inline lampeq::LaurentPoly random_poly(std::mt19937_64& rng,
                                       std::int64_t max_size,
                                       double zero_prob = 0.05) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    if (u(rng) < zero_prob) return lampeq::LaurentPoly::zero();
    std::uniform_int_distribution<std::int64_t> bound(-max_size, max_size);
    std::int64_t lo = bound(rng), hi = bound(rng);
    if (lo > hi) std::swap(lo, hi);
    std::string bits(static_cast<std::size_t>(hi - lo + 1), '0');
    std::bernoulli_distribution coin(0.5);
    for (auto& c : bits) c = coin(rng) ? '1' : '0';
    bits.front() = '1';
    bits.back() = '1';
    return lampeq::LaurentPoly::from_coeff_string(lo, bits);
}

inline lampeq::LaurentPoly random_nonzero_poly(std::mt19937_64& rng,
                                               std::int64_t max_size) {
    return random_poly(rng, max_size, 0.0);
}

inline lampeq::ParametricPoly random_parametric(std::mt19937_64& rng,
                                                std::int64_t max_block_index,
                                                std::int64_t max_size,
                                                int max_blocks = 3) {
    lampeq::ParametricPoly p;
    std::uniform_int_distribution<int> nblocks(0, max_blocks);
    std::uniform_int_distribution<std::int64_t> idx(-max_block_index,
                                                    max_block_index);
    int n = nblocks(rng);
    for (int k = 0; k < n; ++k)
        p.set_block(idx(rng), random_poly(rng, max_size, 0.2));
    return p;
}

} // namespace testutil
