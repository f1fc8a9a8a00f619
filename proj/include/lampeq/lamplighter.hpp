#pragma once

// The lamplighter group L2 = Z |x Z2[z,z^-1]: elements are (delta, f) pairs
// with the action f^delta = f * z^-delta, so
//   (d1, f1) (d2, f2) = (d1 + d2, f1 * z^-d2 + f2).
// Generators: a = (0, 1) toggles the lamp at the origin, t = (1, 0) moves the
// lamplighter.  Over GF(2) every sign in the closed inversion / commutation
// formulas collapses to +.

#include <cstdint>
#include <stdexcept>

#include "lampeq/gf2poly.hpp"
#include "lampeq/word.hpp"

namespace lampeq {

struct GroupElement {
    std::int64_t delta = 0;
    LaurentPoly lamps; // lamp configuration as a Laurent polynomial

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement identity_element() { return {}; }

inline GroupElement gen_a() { return {0, LaurentPoly::one()}; }
inline GroupElement gen_t() { return {1, LaurentPoly::zero()}; }

inline GroupElement mul(const GroupElement& g, const GroupElement& h) {
    return {g.delta + h.delta, g.lamps.shifted(-h.delta) + h.lamps};
}

inline GroupElement inv(const GroupElement& g) {
    return {-g.delta, g.lamps.shifted(g.delta)};
}

/// [g, h] = g^-1 h^-1 g h, computed by direct multiplication.
inline GroupElement commutator(const GroupElement& g, const GroupElement& h) {
    return mul(mul(mul(inv(g), inv(h)), g), h);
}

/// h^-1 g h, computed by direct multiplication.
inline GroupElement conjugate(const GroupElement& g, const GroupElement& h) {
    return mul(mul(inv(h), g), h);
}

inline GroupElement element_of(Letter l) {
    GroupElement g;
    switch (l.gen) {
    case Gen::A: g = gen_a(); break;
    case Gen::T: g = gen_t(); break;
    case Gen::X: throw std::invalid_argument("eval_word: word contains x");
    }
    return l.sign > 0 ? g : inv(g);
}

/// Evaluates a constant word w(a,t) in L2, right to left:
/// a^± prepends z^-delta to the lamps, t^± shifts delta.
inline GroupElement eval_word(const Word& w) {
    GroupElement acc;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const Letter& l = *it;
        switch (l.gen) {
        case Gen::A:
            acc.lamps = acc.lamps + LaurentPoly::monomial(-acc.delta);
            break;
        case Gen::T:
            acc.delta += l.sign;
            break;
        case Gen::X:
            throw std::invalid_argument("eval_word: word contains x");
        }
    }
    return acc;
}

/// Evaluates w with x bound to x_val; the solver's final verification oracle.
inline GroupElement substitute(const Word& w, const GroupElement& x_val) {
    GroupElement acc;
    const GroupElement x_inv = inv(x_val);
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const Letter& l = *it;
        if (l.gen == Gen::X)
            acc = mul(l.sign > 0 ? x_val : x_inv, acc);
        else
            acc = mul(element_of(l), acc);
    }
    return acc;
}

/// A word v over {a, t} with eval_word(v) = g: one t^k a t^-k block per lit
/// lamp of g.lamps * z^delta, followed by t^delta.  Not length-minimal.
inline Word pair_to_word(const GroupElement& g) {
    Word out;
    const LaurentPoly lamps = g.lamps.shifted(g.delta);
    for (std::int64_t k : lamps.exponents()) {
        for (std::int64_t n = 0; n < std::abs(k); ++n)
            out.push_back({Gen::T, k > 0 ? +1 : -1});
        out.push_back({Gen::A, +1});
        for (std::int64_t n = 0; n < std::abs(k); ++n)
            out.push_back({Gen::T, k > 0 ? -1 : +1});
    }
    for (std::int64_t n = 0; n < std::abs(g.delta); ++n)
        out.push_back({Gen::T, g.delta > 0 ? +1 : -1});
    return out;
}

} // namespace lampeq
