#pragma once

// Decision procedure for one-variable equations w(a,t,x) = 1 over the
// lamplighter group.  x = (delta, f) solves w = 1 iff both components of the
// substituted pair vanish:
//   t_w + delta * x_w = 0   and   num_delta + f * den_delta = 0.
// sigma_x != 0 pins delta = -t_w / x_w and reduces to one exact division;
// sigma_x = 0 with t_w != 0 is unsolvable; sigma_x = t_w = 0 is a divisibility
// search den_delta | num_delta over delta, made terminating by the
// piecewise-periodicity witness bounds:
//   span gap < 0            ->  delta <= 2B + 2A,
//   span gap = Delta >= 0   ->  delta <= P^Delta + 2(B + 4A*Delta) + 4A + 1,
// with A, B the coefficient windows (normalized so A <= B), P the period of
// the divisor's leading block, and the negative side covered through flip.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <thread>
#include <vector>

#include "lampeq/divauto.hpp"
#include "lampeq/lamplighter.hpp"
#include "lampeq/parametric.hpp"
#include "lampeq/tracer.hpp"

namespace lampeq {

using BigInt = boost::multiprecision::cpp_int;

enum class Verdict { No, Yes, Unknown };

struct SolveOutcome {
    Verdict verdict = Verdict::No;
    std::optional<std::int64_t> delta;
    std::optional<LaurentPoly> lamp;
    std::optional<Word> solution;
    std::optional<BigInt> theoretical_bound; // reported on Unknown
    std::int64_t budget = 0;                 // reported on Unknown
};

struct SolveOptions {
    std::int64_t max_delta = 1'000'000; // cap on |delta| in the witness scan
    int threads = 1;                    // scan parallelism; outcome-invariant
    int period_degree_limit = 16;       // degree cap for exact P_f
};

inline bool verify(const Word& w, const GroupElement& sol) {
    return substitute(w, sol) == identity_element();
}

/// |delta| <= 2^ceil(|w|^2 / 2) + 2|w|^2 + 3|w| + 1, the global witness bound
/// for sigma_x(w) = 0; exact, so only computable for desk-scale |w|.
inline BigInt theoretical_delta_bound(const Word& w) {
    const std::int64_t len = static_cast<std::int64_t>(w.size());
    const std::int64_t exp = (len * len + 1) / 2;
    if (exp > (std::int64_t{1} << 22))
        throw capacity_error("theoretical_delta_bound: word too long");
    return (BigInt(1) << static_cast<unsigned>(exp)) + 2 * len * len + 3 * len + 1;
}

/// Witness cutoff for the one-sided search (delta >= 0) of divisor | dividend.
/// A trivial dividend needs no search (bound 0).  When the leading block is
/// too large for an exact period the 4^n bound stands in for P.
inline BigInt witness_bound(const ParametricPoly& divisor,
                            const ParametricPoly& dividend,
                            int period_degree_limit = 16) {
    if (divisor.is_trivial())
        throw std::domain_error("witness_bound: trivial divisor");
    if (dividend.is_trivial()) return 0;
    const DeltaBounds fb = delta_bounds(divisor);
    const DeltaBounds gb = delta_bounds(dividend);
    const std::int64_t A = fb.coeff_bound;
    const std::int64_t B = std::max(gb.coeff_bound, A);
    const std::int64_t span_gap = (gb.deg_delta - gb.ord_delta) -
                                  (fb.deg_delta - fb.ord_delta);
    if (span_gap < 0) return BigInt(2 * B + 2 * A);
    const LaurentPoly& leading = divisor.block(fb.deg_delta);
    BigInt P;
    try {
        P = DivAutomaton(leading, period_degree_limit).period();
    } catch (const capacity_error&) {
        const std::int64_t n = leading.span_bits() - 1;
        P = BigInt(1) << static_cast<unsigned>(2 * n);
    }
    return boost::multiprecision::pow(P, static_cast<unsigned>(span_gap)) +
           2 * (B + 4 * A * span_gap) + 4 * A + 1;
}

struct DivScan {
    enum class Status {
        Witness,        // a qualifying delta was found
        NoneDefinitive, // the full witness bound was scanned
        NoneBudget,     // truncated by the budget before reaching the bound
    };
    Status status = Status::NoneDefinitive;
    std::int64_t witness = 0; // valid when status == Witness
    BigInt bound;             // the witness cutoff for this instance
};

namespace detail {

inline bool divides_at(const ParametricPoly& divisor,
                       const ParametricPoly& dividend, std::int64_t delta) {
    return divides(divisor.instantiate(delta), dividend.instantiate(delta));
}

// First candidate (in list order) satisfying the predicate; block-parallel
// with a fixed block decomposition, so the result is thread-count invariant.
template <typename Pred>
std::optional<std::size_t> first_hit(const std::vector<std::int64_t>& cands,
                                     int threads, Pred&& pred) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (pred(cands[i])) return i;
        return std::nullopt;
    }
    const std::size_t block = static_cast<std::size_t>(threads) * 8;
    std::vector<char> hit(block);
    for (std::size_t start = 0; start < cands.size(); start += block) {
        const std::size_t end = std::min(start + block, cands.size());
        std::fill(hit.begin(), hit.end(), 0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int tid = 0; tid < threads; ++tid)
            pool.emplace_back([&, tid] {
                for (std::size_t i = start + static_cast<std::size_t>(tid);
                     i < end; i += static_cast<std::size_t>(threads))
                    hit[i - start] = pred(cands[i]) ? 1 : 0;
            });
        for (auto& th : pool) th.join();
        for (std::size_t i = start; i < end; ++i)
            if (hit[i - start]) return i;
    }
    return std::nullopt;
}

} // namespace detail

/// DIV+: least delta >= 0 with divisor_delta | dividend_delta, scanning up to
/// min(witness_bound, budget).
inline DivScan div_plus(const ParametricPoly& divisor,
                        const ParametricPoly& dividend, std::int64_t budget,
                        int period_degree_limit = 16) {
    DivScan out;
    out.bound = witness_bound(divisor, dividend, period_degree_limit);
    const std::int64_t limit =
        out.bound > budget ? budget : static_cast<std::int64_t>(out.bound);
    for (std::int64_t d = 0; d <= limit; ++d) {
        if (detail::divides_at(divisor, dividend, d)) {
            out.status = DivScan::Status::Witness;
            out.witness = d;
            return out;
        }
    }
    out.status = out.bound > budget ? DivScan::Status::NoneBudget
                                    : DivScan::Status::NoneDefinitive;
    return out;
}

/// DIV: the positive side first, then the flipped instance with the witness
/// negated.
inline DivScan div(const ParametricPoly& divisor, const ParametricPoly& dividend,
                   std::int64_t budget, int period_degree_limit = 16) {
    DivScan pos = div_plus(divisor, dividend, budget, period_degree_limit);
    if (pos.status == DivScan::Status::Witness) return pos;
    DivScan neg = div_plus(divisor.flip(), dividend.flip(), budget,
                           period_degree_limit);
    if (neg.status == DivScan::Status::Witness) {
        neg.witness = -neg.witness;
        return neg;
    }
    DivScan out;
    out.bound = pos.bound > neg.bound ? pos.bound : neg.bound;
    out.status = (pos.status == DivScan::Status::NoneBudget ||
                  neg.status == DivScan::Status::NoneBudget)
                     ? DivScan::Status::NoneBudget
                     : DivScan::Status::NoneDefinitive;
    return out;
}

namespace detail {

inline SolveOutcome yes_outcome(std::int64_t delta, LaurentPoly lamp) {
    SolveOutcome out;
    out.verdict = Verdict::Yes;
    out.delta = delta;
    out.solution = pair_to_word({delta, lamp});
    out.lamp = std::move(lamp);
    return out;
}

inline SolveOutcome no_outcome() { return {}; }

// Interleaved two-sided scan 0, +1, -1, +2, -2, ... with per-side caps; the
// first hit in this order is the least-|delta| witness (ties: nonnegative).
inline std::optional<std::int64_t>
scan_interleaved(const ParametricPoly& divisor, const ParametricPoly& dividend,
                 std::int64_t pos_limit, std::int64_t neg_limit, int threads) {
    std::int64_t k = 0;
    while (k <= pos_limit || k <= neg_limit) {
        std::vector<std::int64_t> cands;
        const std::int64_t chunk = 256;
        for (std::int64_t n = 0; n < chunk && (k <= pos_limit || k <= neg_limit);
             ++n, ++k) {
            if (k <= pos_limit) cands.push_back(k);
            if (k > 0 && k <= neg_limit) cands.push_back(-k);
        }
        auto hit = first_hit(cands, threads, [&](std::int64_t d) {
            return divides_at(divisor, dividend, d);
        });
        if (hit) return cands[*hit];
    }
    return std::nullopt;
}

} // namespace detail

/// Fast path for sigma_x(w) != 0: delta = -t_w / x_w must be an integer and
/// then f = num_delta / den_delta must be exact.
inline SolveOutcome solve_sigma_nonzero(const Word& w) {
    const ExponentSums sums = exponent_sums(w);
    if (sums.x == 0)
        throw std::invalid_argument("solve_sigma_nonzero: sigma_x(w) == 0");
    if (sums.t % sums.x != 0) return detail::no_outcome();
    const std::int64_t delta = -sums.t / sums.x;
    auto [num_d, den_d] = instantiate_num_den(w, delta);
    if (den_d.is_zero()) {
        if (num_d.is_zero()) return detail::yes_outcome(delta, LaurentPoly::zero());
        return detail::no_outcome();
    }
    auto [q, r] = divmod(num_d, den_d);
    if (!r.is_zero()) return detail::no_outcome();
    return detail::yes_outcome(delta, q);
}

/// Full case split of the decision procedure.
inline SolveOutcome decide(const Word& w, const SolveOptions& opt = {}) {
    const TraceResult tr = trace(w);
    if (tr.x_w != 0) return solve_sigma_nonzero(w);
    if (tr.t_w != 0) return detail::no_outcome();

    const ParametricPoly& divisor = tr.den;
    const ParametricPoly& dividend = tr.num;

    if (divisor.is_trivial()) {
        // (C2) degenerates to num_delta = 0; any lamp configuration works.
        const ZeroInstantiations zs = zero_instantiations(dividend);
        if (zs.all) return detail::yes_outcome(0, LaurentPoly::zero());
        std::optional<std::int64_t> best;
        for (std::int64_t d : zs.deltas) {
            if (!best || std::abs(d) < std::abs(*best) ||
                (std::abs(d) == std::abs(*best) && d > *best))
                best = d;
        }
        if (best) return detail::yes_outcome(*best, LaurentPoly::zero());
        return detail::no_outcome();
    }

    const BigInt pos_bound =
        witness_bound(divisor, dividend, opt.period_degree_limit);
    const BigInt neg_bound = witness_bound(divisor.flip(), dividend.flip(),
                                           opt.period_degree_limit);
    const std::int64_t pos_limit = pos_bound > opt.max_delta
                                       ? opt.max_delta
                                       : static_cast<std::int64_t>(pos_bound);
    const std::int64_t neg_limit = neg_bound > opt.max_delta
                                       ? opt.max_delta
                                       : static_cast<std::int64_t>(neg_bound);

    auto witness = detail::scan_interleaved(divisor, dividend, pos_limit,
                                            neg_limit, opt.threads);
    if (witness) {
        const LaurentPoly den_d = divisor.instantiate(*witness);
        const LaurentPoly num_d = dividend.instantiate(*witness);
        LaurentPoly lamp = den_d.is_zero() ? LaurentPoly::zero()
                                           : divmod(num_d, den_d).first;
        return detail::yes_outcome(*witness, std::move(lamp));
    }
    if (pos_bound <= opt.max_delta && neg_bound <= opt.max_delta)
        return detail::no_outcome();

    SolveOutcome out;
    out.verdict = Verdict::Unknown;
    out.budget = opt.max_delta;
    try {
        out.theoretical_bound = theoretical_delta_bound(w);
    } catch (const capacity_error&) {
        // leave the field empty when the closed form itself is too large
    }
    return out;
}

} // namespace lampeq
