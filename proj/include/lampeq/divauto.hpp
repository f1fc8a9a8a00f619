#pragma once

// The division-by-f automaton over plain GF(2) polynomials with f(0) = 1:
// states are the 2^n residues mod f (n = deg f) encoded as n-bit integers,
// with transitions s -b-> (s*z + b) mod f and state 0 both initial and
// accepting.  A word is accepted iff f divides the polynomial it spells.
//
// The period P_f is the number of pair vertices (z^m mod f, g) reachable from
// (1, 0) under (p, g) -> (p*z, g*z + b); reading any word P_f times returns
// every state to itself.  Because the first component walks the cycle
// z^0, z^1, ... of length e = ord(z mod f) and the set of reachable second
// components per first component grows monotonically to all 2^n residues,
// the reachable count collapses to e * 2^n, which is what period() computes;
// the literal breadth-first search is kept for cross-validation.

#include <atomic>
#include <cstdint>
#include <queue>
#include <string>
#include <string_view>
#include <vector>

#include "lampeq/gf2poly.hpp"

namespace lampeq {

/// 4^n, the universal bound on P_f for deg(f) = n.
inline std::uint64_t period_bound(int n) {
    if (n < 0 || n > 31)
        throw std::overflow_error("period_bound: 4^n exceeds 64 bits");
    return std::uint64_t{1} << (2 * n);
}

class DivAutomaton {
public:
    /// Builds the automaton for the unit-normalized divisor f * z^-ord(f)
    /// (unit monomial factors affect neither divisibility nor periodicity).
    /// Requires f != 0 and deg of the normalized divisor < 64.
    explicit DivAutomaton(const LaurentPoly& f, int period_degree_limit = 16)
        : period_limit_(period_degree_limit) {
        if (f.is_zero())
            throw std::invalid_argument("DivAutomaton: zero divisor");
        divisor_ = to_plain(f).first;
        n_ = static_cast<int>(divisor_.deg());
        if (n_ >= 63)
            throw capacity_error("DivAutomaton: divisor degree too large");
        fmask_ = 0;
        for (std::int64_t e : divisor_.exponents())
            fmask_ |= std::uint64_t{1} << e;
    }

    /// Rejects divisors that are not already plain with constant term 1.
    static DivAutomaton from_plain(const LaurentPoly& f,
                                   int period_degree_limit = 16) {
        if (f.is_zero() || f.ord() != 0)
            throw std::invalid_argument(
                "DivAutomaton::from_plain: divisor must have constant term 1");
        return DivAutomaton(f, period_degree_limit);
    }

    DivAutomaton(const DivAutomaton& o)
        : divisor_(o.divisor_), n_(o.n_), fmask_(o.fmask_),
          period_limit_(o.period_limit_), period_(o.period_.load()) {}

    DivAutomaton& operator=(const DivAutomaton& o) {
        divisor_ = o.divisor_;
        n_ = o.n_;
        fmask_ = o.fmask_;
        period_limit_ = o.period_limit_;
        period_.store(o.period_.load());
        return *this;
    }

    const LaurentPoly& divisor() const { return divisor_; }
    int degree() const { return n_; }
    std::uint64_t state_count() const { return std::uint64_t{1} << n_; }

    std::uint64_t step(std::uint64_t state, int bit) const {
        if (state >= state_count())
            throw std::out_of_range("DivAutomaton::step: state out of range");
        if (n_ == 0) return 0;
        std::uint64_t t = (state << 1) | static_cast<std::uint64_t>(bit & 1);
        if (t >> n_) t ^= fmask_;
        return t;
    }

    /// Accepts g_m ... g_0 (most significant bit first) iff the divisor
    /// divides g_m z^m + ... + g_0.  The empty string is accepted.
    bool accepts(std::string_view bits) const {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < bits.size(); ++k) {
            if (bits[k] != '0' && bits[k] != '1')
                throw parse_error("expected '0' or '1' bit", k);
            s = step(s, bits[k] - '0');
        }
        return s == 0;
    }

    struct StructuralReport {
        bool strongly_connected = false;
        bool unique_in_per_label = false;
        bool ok() const { return strongly_connected && unique_in_per_label; }
    };

    /// Checks strong connectivity (forward and backward reachability from 0)
    /// and that every state has exactly one incoming edge per label.
    StructuralReport structural_checks() const {
        if (n_ > 24)
            throw capacity_error("structural_checks: state space too large");
        const std::uint64_t count = state_count();
        StructuralReport rep;

        std::vector<char> fwd(count, 0), bwd(count, 0);
        std::vector<std::uint64_t> in0(count, 0), in1(count, 0);
        std::vector<std::vector<std::uint64_t>> pred(count);
        for (std::uint64_t s = 0; s < count; ++s) {
            std::uint64_t t0 = step(s, 0), t1 = step(s, 1);
            ++in0[t0];
            ++in1[t1];
            pred[t0].push_back(s);
            pred[t1].push_back(s);
        }
        auto bfs = [&](std::vector<char>& seen, bool forward) {
            std::queue<std::uint64_t> q;
            q.push(0);
            seen[0] = 1;
            while (!q.empty()) {
                std::uint64_t s = q.front();
                q.pop();
                if (forward) {
                    for (int b : {0, 1}) {
                        std::uint64_t t = step(s, b);
                        if (!seen[t]) {
                            seen[t] = 1;
                            q.push(t);
                        }
                    }
                } else {
                    for (std::uint64_t t : pred[s])
                        if (!seen[t]) {
                            seen[t] = 1;
                            q.push(t);
                        }
                }
            }
        };
        bfs(fwd, true);
        bfs(bwd, false);
        rep.strongly_connected = true;
        rep.unique_in_per_label = true;
        for (std::uint64_t s = 0; s < count; ++s) {
            if (!fwd[s] || !bwd[s]) rep.strongly_connected = false;
            if (in0[s] != 1 || in1[s] != 1) rep.unique_in_per_label = false;
        }
        return rep;
    }

    /// Multiplicative order of z modulo the divisor (the length of the cycle
    /// the first pair component walks).  1 for the degree-0 automaton.
    std::uint64_t z_order() const {
        if (n_ == 0) return 1;
        std::uint64_t p = 1, e = 0;
        do {
            p = step_free(p);
            ++e;
        } while (p != 1);
        return e;
    }

    /// P_f: the pair-BFS reachable count from (1, 0), evaluated through the
    /// level structure as ord(z mod f) * 2^n.  Cached; racing fills agree.
    std::uint64_t period() const {
        std::uint64_t cached = period_.load(std::memory_order_acquire);
        if (cached) return cached;
        if (n_ > period_limit_)
            throw capacity_error("period: divisor degree exceeds limit");
        std::uint64_t p = n_ == 0 ? 1 : z_order() << n_;
        period_.store(p, std::memory_order_release);
        return p;
    }

    /// Literal breadth-first search over reachable pairs (z^m mod f, g);
    /// quadratic in the state count, for cross-validation at small degree.
    std::uint64_t period_pair_bfs() const {
        if (n_ == 0) return 1;
        if (n_ > 13)
            throw capacity_error("period_pair_bfs: pair space too large");
        const std::uint64_t count = state_count();
        std::vector<bool> seen(count * count, false);
        std::queue<std::pair<std::uint64_t, std::uint64_t>> q;
        auto visit = [&](std::uint64_t p, std::uint64_t g) {
            std::uint64_t idx = p * count + g;
            if (!seen[idx]) {
                seen[idx] = 1;
                q.push({p, g});
                return true;
            }
            return false;
        };
        std::uint64_t total = 0;
        visit(1, 0);
        ++total;
        while (!q.empty()) {
            auto [p, g] = q.front();
            q.pop();
            std::uint64_t pz = step_free(p);
            for (int b : {0, 1})
                if (visit(pz, step(g, b))) ++total;
        }
        return total;
    }

    /// GraphViz rendering; guarded to small automata.
    std::string to_dot() const {
        if (n_ > 10) throw capacity_error("to_dot: automaton too large to render");
        std::string out = "digraph divauto {\n  rankdir=LR;\n";
        auto label = [&](std::uint64_t s) {
            LaurentPoly p;
            for (int k = 0; k < 64; ++k)
                if ((s >> k) & 1u) p = p + LaurentPoly::monomial(k);
            return format_poly(p);
        };
        for (std::uint64_t s = 0; s < state_count(); ++s) {
            out += "  n" + std::to_string(s) + " [label=\"" + label(s) + "\"";
            if (s == 0) out += ", shape=doublecircle";
            out += "];\n";
        }
        for (std::uint64_t s = 0; s < state_count(); ++s)
            for (int b : {0, 1})
                out += "  n" + std::to_string(s) + " -> n" +
                       std::to_string(step(s, b)) + " [label=\"" +
                       std::to_string(b) + "\"];\n";
        out += "}\n";
        return out;
    }

private:
    // s*z mod f without the added bit (valid for n_ >= 1).
    std::uint64_t step_free(std::uint64_t s) const {
        std::uint64_t t = s << 1;
        if (t >> n_) t ^= fmask_;
        return t;
    }

    LaurentPoly divisor_;
    int n_ = 0;
    std::uint64_t fmask_ = 0;
    int period_limit_ = 16;
    mutable std::atomic<std::uint64_t> period_{0};
};

} // namespace lampeq
