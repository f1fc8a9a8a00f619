#pragma once

// Right-to-left tracing of a word on the xt-grid.  Walking w from its last
// letter, the current grid vertex is (-x_w, -t_w): an a-letter toggles that
// vertex into N, an x-step toggles the left endpoint of the traversed edge
// into D, t-letters only move.  num = from_grid(N) and den = from_grid(D) are
// the delta-parametric polynomials with substitute(w, (delta, f)) =
// (t_w + delta*x_w, num_delta + f*den_delta).
//
// The Magnus-style matrix fold over
//   X = [x^-1;0;1], T = [t^-1;0;0], A = [1;1;0]   (first columns; unit lower
// diagonal elsewhere) computes the same triple and serves as an independent
// oracle for the tracing recurrences.

#include <cstdint>
#include <utility>
#include <vector>

#include "lampeq/gf2poly.hpp"
#include "lampeq/parametric.hpp"
#include "lampeq/word.hpp"

namespace lampeq {

struct TraceResult {
    std::int64_t t_w = 0;
    std::int64_t x_w = 0;
    ParametricPoly num;
    ParametricPoly den;
    GridPointSet N;
    GridPointSet D;
    std::vector<GridPoint> path; // vertices visited, recorded on request
};

inline TraceResult trace(const Word& w, bool record_path = false) {
    TraceResult r;
    if (record_path) r.path.push_back({0, 0});
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const Letter& l = *it;
        switch (l.gen) {
        case Gen::A:
            toggle(r.N, {-r.x_w, -r.t_w});
            break;
        case Gen::T:
            r.t_w += l.sign;
            if (record_path) r.path.push_back({-r.x_w, -r.t_w});
            break;
        case Gen::X:
            if (l.sign > 0) {
                toggle(r.D, {-r.x_w, -r.t_w});
                r.x_w += 1;
            } else {
                r.x_w -= 1;
                toggle(r.D, {-r.x_w, -r.t_w});
            }
            if (record_path) r.path.push_back({-r.x_w, -r.t_w});
            break;
        }
    }
    r.num = from_grid(r.N);
    r.den = from_grid(r.D);
    return r;
}

/// (num_delta, den_delta) in one pass: the toggled exponent -t_w - delta*x_w
/// is maintained incrementally and accumulated in a dense bit buffer over
/// [-L, L], L = |w| * (|delta| + 1); for |delta| <= |w| this is the
/// |w|^2 + |w| window the instantiated degrees are confined to.
inline std::pair<LaurentPoly, LaurentPoly>
instantiate_num_den(const Word& w, std::int64_t delta) {
    const std::int64_t len = static_cast<std::int64_t>(w.size());
    const std::int64_t limit = len * (std::abs(delta) + 1);
    if (limit > (std::int64_t{1} << 31))
        throw capacity_error("instantiate_num_den: coefficient buffer too large");
    const std::int64_t width = 2 * limit + 1;
    std::vector<std::uint64_t> nbuf(detail::words_for(width), 0);
    std::vector<std::uint64_t> dbuf(detail::words_for(width), 0);
    auto flip_bit = [&](std::vector<std::uint64_t>& buf, std::int64_t e) {
        std::int64_t k = e + limit;
        buf[static_cast<std::size_t>(k / 64)] ^= 1ull << (k % 64);
    };
    std::int64_t e = 0; // -t_w - delta * x_w for the current prefix
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const Letter& l = *it;
        switch (l.gen) {
        case Gen::A:
            flip_bit(nbuf, e);
            break;
        case Gen::T:
            e -= l.sign;
            break;
        case Gen::X:
            if (l.sign > 0) {
                flip_bit(dbuf, e);
                e -= delta;
            } else {
                e += delta;
                flip_bit(dbuf, e);
            }
            break;
        }
    }
    return {LaurentPoly::normalized(-limit, std::move(nbuf), width),
            LaurentPoly::normalized(-limit, std::move(dbuf), width)};
}

struct MagnusMatrix {
    std::int64_t corner_x = 0; // corner monomial x^corner_x t^corner_t
    std::int64_t corner_t = 0;
    ParametricPoly num;
    ParametricPoly den;

    friend bool operator==(const MagnusMatrix&, const MagnusMatrix&) = default;

    static MagnusMatrix identity() { return {}; }

    static MagnusMatrix generator(Letter l) {
        MagnusMatrix m;
        switch (l.gen) {
        case Gen::X:
            m.corner_x = -l.sign;
            // den entry: 1 for x, the monomial x for x^-1
            m.den = ParametricPoly::monomial(l.sign > 0 ? 0 : 1, 0);
            break;
        case Gen::T:
            m.corner_t = -l.sign;
            break;
        case Gen::A:
            m.num = ParametricPoly::monomial(0, 0);
            break;
        }
        return m;
    }
};

/// First-column product of the lower-triangular matrices.
inline MagnusMatrix operator*(const MagnusMatrix& l, const MagnusMatrix& r) {
    MagnusMatrix out;
    out.corner_x = l.corner_x + r.corner_x;
    out.corner_t = l.corner_t + r.corner_t;
    out.num = l.num.mul_monomial(r.corner_t, r.corner_x) + r.num;
    out.den = l.den.mul_monomial(r.corner_t, r.corner_x) + r.den;
    return out;
}

inline MagnusMatrix magnus(const Word& w) {
    MagnusMatrix acc;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        acc = MagnusMatrix::generator(*it) * acc;
    return acc;
}

} // namespace lampeq
