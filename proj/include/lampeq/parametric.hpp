#pragma once

// Delta-parametric polynomials sum_i f_i(z) z^(i*delta), stored as a map from
// block index i to a nonzero Laurent block.  Under z^(a+b*delta) <-> t^a x^b
// the same data is an element of the group ring Z2[Z^2], so grid point sets
// convert losslessly and multiplication by a single monomial t^a x^b is a
// block reindex plus shift.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "lampeq/gf2poly.hpp"

namespace lampeq {

struct GridPoint {
    std::int64_t x = 0; // exponent of x, i.e. the block index
    std::int64_t t = 0; // exponent of t, i.e. the z-exponent inside the block

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct GridPointHash {
    std::size_t operator()(const GridPoint& p) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(p.t) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using GridPointSet = std::unordered_set<GridPoint, GridPointHash>;

inline void toggle(GridPointSet& s, GridPoint p) {
    if (auto it = s.find(p); it != s.end())
        s.erase(it);
    else
        s.insert(p);
}

class ParametricPoly {
public:
    ParametricPoly() = default;

    static ParametricPoly trivial() { return {}; }

    /// z^(j + i*delta)
    static ParametricPoly monomial(std::int64_t i, std::int64_t j) {
        ParametricPoly p;
        p.blocks_[i] = LaurentPoly::monomial(j);
        return p;
    }

    bool is_trivial() const { return blocks_.empty(); }

    const std::map<std::int64_t, LaurentPoly>& blocks() const { return blocks_; }

    const LaurentPoly& block(std::int64_t i) const {
        static const LaurentPoly kZero;
        auto it = blocks_.find(i);
        return it == blocks_.end() ? kZero : it->second;
    }

    void set_block(std::int64_t i, LaurentPoly f) {
        if (f.is_zero())
            blocks_.erase(i);
        else
            blocks_[i] = std::move(f);
    }

    void toggle_monomial(std::int64_t i, std::int64_t j) {
        set_block(i, block(i) + LaurentPoly::monomial(j));
    }

    std::int64_t ord_delta() const {
        if (is_trivial())
            throw std::domain_error("ord_delta() of the trivial parametric polynomial");
        return blocks_.begin()->first;
    }

    std::int64_t deg_delta() const {
        if (is_trivial())
            throw std::domain_error("deg_delta() of the trivial parametric polynomial");
        return blocks_.rbegin()->first;
    }

    friend bool operator==(const ParametricPoly&, const ParametricPoly&) = default;

    /// Block-wise XOR (ring addition).
    friend ParametricPoly operator+(const ParametricPoly& a, const ParametricPoly& b) {
        ParametricPoly out(a);
        for (const auto& [i, f] : b.blocks_) out.set_block(i, out.block(i) + f);
        return out;
    }

    /// Multiplication by the monomial t^a x^b: block i -> i + b, shift by a.
    ParametricPoly mul_monomial(std::int64_t a, std::int64_t b) const {
        ParametricPoly out;
        for (const auto& [i, f] : blocks_) out.blocks_[i + b] = f.shifted(a);
        return out;
    }

    LaurentPoly instantiate(std::int64_t delta) const {
        LaurentPoly out;
        for (const auto& [i, f] : blocks_) out = out + f.shifted(i * delta);
        return out;
    }

    /// Replaces delta by -delta: instantiate(flip(P), d) = instantiate(P, -d).
    ParametricPoly flip() const {
        ParametricPoly out;
        for (const auto& [i, f] : blocks_) out.blocks_[-i] = f;
        return out;
    }

private:
    std::map<std::int64_t, LaurentPoly> blocks_; // nonzero blocks only
};

inline ParametricPoly from_grid(const GridPointSet& s) {
    ParametricPoly p;
    for (const GridPoint& pt : s) p.toggle_monomial(pt.x, pt.t);
    return p;
}

inline GridPointSet to_grid(const ParametricPoly& p) {
    GridPointSet s;
    for (const auto& [i, f] : p.blocks())
        for (std::int64_t j : f.exponents()) s.insert({i, j});
    return s;
}

struct DeltaBounds {
    std::int64_t ord_delta = 0; // s
    std::int64_t deg_delta = 0; // t
    std::int64_t coeff_bound = 0; // A = max over blocks of max(|ord|, |deg|)
};

inline DeltaBounds delta_bounds(const ParametricPoly& p) {
    if (p.is_trivial())
        throw std::domain_error("delta_bounds() of the trivial parametric polynomial");
    DeltaBounds b{p.ord_delta(), p.deg_delta(), 0};
    for (const auto& [i, f] : p.blocks())
        b.coeff_bound = std::max(b.coeff_bound, f.size());
    return b;
}

struct ZeroInstantiations {
    bool all = false; // trivial input: every delta instantiates to zero
    std::vector<std::int64_t> deltas; // sorted, exact, when !all
};

/// The exact set of delta with instantiate(P, delta) = 0.  Any zero needs
/// exponent collisions across distinct blocks, which pin delta to the finite
/// candidate set {(j - j') / (i' - i)}; each candidate is verified exactly.
inline ZeroInstantiations zero_instantiations(const ParametricPoly& p) {
    if (p.is_trivial()) return {true, {}};
    if (p.blocks().size() < 2) return {false, {}};
    std::vector<GridPoint> monos;
    for (const auto& [i, f] : p.blocks())
        for (std::int64_t j : f.exponents()) monos.push_back({i, j});
    std::set<std::int64_t> candidates;
    for (std::size_t u = 0; u < monos.size(); ++u)
        for (std::size_t v = u + 1; v < monos.size(); ++v) {
            std::int64_t di = monos[v].x - monos[u].x;
            if (di == 0) continue;
            std::int64_t dj = monos[u].t - monos[v].t;
            if (dj % di != 0) continue;
            candidates.insert(dj / di);
        }
    ZeroInstantiations out;
    for (std::int64_t d : candidates)
        if (p.instantiate(d).is_zero()) out.deltas.push_back(d);
    return out;
}

/// Terms `z^(a+b d)` joined by `+` with `d` the parameter, e.g.
/// `1 + z^d + z^(1+2d)`.  Blocks ascending, exponents ascending inside.
inline std::string format_parametric(const ParametricPoly& p) {
    if (p.is_trivial()) return "0";
    std::string out;
    for (const auto& [i, f] : p.blocks()) {
        for (std::int64_t j : f.exponents()) {
            if (!out.empty()) out += " + ";
            if (i == 0) {
                if (j == 0)
                    out += "1";
                else if (j == 1)
                    out += "z";
                else
                    out += "z^" + std::to_string(j);
            } else if (j == 0 && i == 1) {
                out += "z^d";
            } else if (j == 0 && i == -1) {
                out += "z^-d";
            } else {
                std::string e;
                if (j != 0) e += std::to_string(j);
                if (i != 0) {
                    if (!e.empty() && i > 0) e += "+";
                    if (i == -1)
                        e += "-";
                    else if (i != 1)
                        e += std::to_string(i);
                    e += "d";
                }
                out += "z^(" + e + ")";
            }
        }
    }
    return out;
}

/// Inverse of format_parametric.  Accepts `0`, `1`, `z`, `z^<int>`, `z^d`,
/// `z^-d`, and `z^(<a>{+|-}<b>d)` forms joined by `+`.
inline ParametricPoly parse_parametric(std::string_view text) {
    ParametricPoly p;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto parse_int = [&](bool allow_sign) -> std::int64_t {
        std::size_t start = i;
        bool neg = false;
        if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected integer", start);
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > (std::int64_t{1} << 50)) throw parse_error("exponent too large", start);
            ++i;
        }
        return neg ? -v : v;
    };
    // Parses the linear form `a`, `d`, `-d`, `2d`, `a+bd`, `a-bd`, ... into (a, b).
    auto parse_linear = [&]() -> std::pair<std::int64_t, std::int64_t> {
        std::int64_t a = 0, b = 0;
        bool first = true;
        while (true) {
            skip_ws();
            std::int64_t sign = 1;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                sign = text[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            } else if (!first) {
                break;
            }
            if (i < text.size() && text[i] == 'd') {
                ++i;
                b += sign;
            } else {
                std::int64_t v = sign * parse_int(false);
                skip_ws();
                if (i < text.size() && text[i] == 'd') {
                    ++i;
                    b += v;
                } else {
                    a += v;
                }
            }
            first = false;
        }
        return {a, b};
    };

    skip_ws();
    if (i >= text.size()) throw parse_error("empty parametric polynomial text", i);
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (expect_term) throw parse_error("dangling '+'", i);
            break;
        }
        if (!expect_term) {
            if (text[i] != '+') throw parse_error("expected '+' between terms", i);
            ++i;
            expect_term = true;
            continue;
        }
        char c = text[i];
        if (c == '0') {
            ++i;
        } else if (c == '1') {
            ++i;
            p.toggle_monomial(0, 0);
        } else if (c == 'z') {
            ++i;
            std::int64_t a = 1, b = 0;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i < text.size() && text[i] == '(') {
                    std::size_t open = i++;
                    std::tie(a, b) = parse_linear();
                    skip_ws();
                    if (i >= text.size() || text[i] != ')')
                        throw parse_error("unterminated '(' in exponent", open);
                    ++i;
                } else if (i < text.size() && text[i] == 'd') {
                    ++i;
                    a = 0;
                    b = 1;
                } else if (i + 1 < text.size() && text[i] == '-' && text[i + 1] == 'd') {
                    i += 2;
                    a = 0;
                    b = -1;
                } else {
                    a = parse_int(true);
                    b = 0;
                }
            }
            p.toggle_monomial(b, a);
        } else {
            throw parse_error("expected term '0', '1', 'z', 'z^<int>' or 'z^(a+bd)'", i);
        }
        expect_term = false;
    }
    return p;
}

} // namespace lampeq
