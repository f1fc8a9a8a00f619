#pragma once

// Laurent polynomials over GF(2) in strict (order, bit string) form.  The
// coefficient of z^(order+k) is bit k of the packed word vector; a canonical
// value is empty (zero) or has its first and last bits set.  All operations
// return canonical values; objects are immutable after construction and safe
// to share across threads.

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lampeq/detail/carryless.hpp"
#include "lampeq/errors.hpp"

namespace lampeq {

class LaurentPoly {
public:
    /// The zero polynomial.
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0); }

    /// z^k
    static LaurentPoly monomial(std::int64_t k) {
        LaurentPoly p;
        p.order_ = k;
        p.nbits_ = 1;
        p.words_.assign(1, 1);
        p.check_exponents();
        return p;
    }

    /// Canonical polynomial from a (possibly non-strict) coefficient window:
    /// bit k of `words` is the coefficient of z^(order+k), k < nbits.
    static LaurentPoly normalized(std::int64_t order,
                                  std::vector<std::uint64_t> words,
                                  std::int64_t nbits) {
        LaurentPoly p;
        p.order_ = order;
        p.nbits_ = nbits;
        p.words_ = std::move(words);
        p.words_.resize(detail::words_for(nbits));
        p.trim();
        return p;
    }

    /// Coefficient window given as a string of '0'/'1', index 0 = z^order.
    static LaurentPoly from_coeff_string(std::int64_t order,
                                         std::string_view bits) {
        std::vector<std::uint64_t> w(detail::words_for(
            static_cast<std::int64_t>(bits.size())));
        for (std::size_t k = 0; k < bits.size(); ++k) {
            if (bits[k] == '1')
                w[k / 64] |= 1ull << (k % 64);
            else if (bits[k] != '0')
                throw parse_error("expected '0' or '1' in coefficient string", k);
        }
        return normalized(order, std::move(w),
                          static_cast<std::int64_t>(bits.size()));
    }

    /// Polynomial with the given set of exponents.
    static LaurentPoly from_exponents(const std::set<std::int64_t>& exps) {
        if (exps.empty()) return zero();
        std::int64_t lo = *exps.begin(), hi = *exps.rbegin();
        LaurentPoly p;
        p.order_ = lo;
        p.nbits_ = hi - lo + 1;
        p.words_.assign(detail::words_for(p.nbits_), 0);
        for (std::int64_t e : exps) {
            std::int64_t k = e - lo;
            p.words_[static_cast<std::size_t>(k / 64)] |= 1ull << (k % 64);
        }
        p.check_exponents();
        return p;
    }

    bool is_zero() const { return nbits_ == 0; }
    bool is_monomial() const { return nbits_ == 1; }

    std::int64_t ord() const {
        if (is_zero()) throw std::domain_error("ord() of the zero polynomial");
        return order_;
    }

    std::int64_t deg() const {
        if (is_zero()) throw std::domain_error("deg() of the zero polynomial");
        return order_ + nbits_ - 1;
    }

    /// max(|deg|, |ord|); 0 for zero.
    std::int64_t size() const {
        if (is_zero()) return 0;
        return std::max(std::abs(ord()), std::abs(deg()));
    }

    /// deg - ord + 1 (the length of the coefficient string); 0 for zero.
    std::int64_t span_bits() const { return nbits_; }

    bool coeff(std::int64_t exponent) const {
        std::int64_t k = exponent - order_;
        if (is_zero() || k < 0 || k >= nbits_) return false;
        return (words_[static_cast<std::size_t>(k / 64)] >> (k % 64)) & 1u;
    }

    std::vector<std::int64_t> exponents() const {
        std::vector<std::int64_t> out;
        for (std::int64_t k = 0; k < nbits_; ++k)
            if ((words_[static_cast<std::size_t>(k / 64)] >> (k % 64)) & 1u)
                out.push_back(order_ + k);
        return out;
    }

    std::string coeff_string() const {
        std::string s(static_cast<std::size_t>(nbits_), '0');
        for (std::int64_t k = 0; k < nbits_; ++k)
            if ((words_[static_cast<std::size_t>(k / 64)] >> (k % 64)) & 1u)
                s[static_cast<std::size_t>(k)] = '1';
        return s;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nbits_ == b.nbits_ && a.order_ == b.order_ &&
               a.words_ == b.words_;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::int64_t lo = std::min(a.order_, b.order_);
        std::int64_t hi = std::max(a.order_ + a.nbits_, b.order_ + b.nbits_);
        std::vector<std::uint64_t> w(detail::words_for(hi - lo) + 1, 0);
        detail::xor_shifted(w.data(), a.words_.data(), a.words_.size(),
                            a.order_ - lo);
        detail::xor_shifted(w.data(), b.words_.data(), b.words_.size(),
                            b.order_ - lo);
        return normalized(lo, std::move(w), hi - lo);
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        LaurentPoly p;
        p.order_ = a.order_ + b.order_;
        p.nbits_ = a.nbits_ + b.nbits_ - 1;
        p.words_.assign(a.words_.size() + b.words_.size(), 0);
        detail::mul_words(p.words_.data(), a.words_.data(), a.words_.size(),
                          b.words_.data(), b.words_.size());
        p.words_.resize(detail::words_for(p.nbits_));
        p.check_exponents();
        assert(p.bit(0) && p.bit(p.nbits_ - 1));
        return p;
    }

    /// f * z^k
    LaurentPoly shifted(std::int64_t k) const {
        if (is_zero()) return zero();
        LaurentPoly p(*this);
        p.order_ += k;
        p.check_exponents();
        return p;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    bool bit(std::int64_t k) const {
        return (words_[static_cast<std::size_t>(k / 64)] >> (k % 64)) & 1u;
    }

    void trim() {
        // Drop trailing (high) zeros.
        std::int64_t hi = nbits_;
        while (hi > 0 && !bit(hi - 1)) --hi;
        if (hi == 0) {
            order_ = 0;
            nbits_ = 0;
            words_.clear();
            return;
        }
        // Drop leading (low) zeros by shifting down.
        std::int64_t lo = 0;
        while (!bit(lo)) ++lo;
        if (lo > 0) {
            std::size_t wo = static_cast<std::size_t>(lo / 64);
            int bo = static_cast<int>(lo % 64);
            std::size_t n = words_.size();
            for (std::size_t i = 0; i + wo < n; ++i) {
                std::uint64_t w = words_[i + wo] >> bo;
                if (bo && i + wo + 1 < n) w |= words_[i + wo + 1] << (64 - bo);
                words_[i] = w;
            }
            order_ += lo;
        }
        nbits_ = hi - lo;
        words_.resize(detail::words_for(nbits_));
        if (std::int64_t rem = nbits_ % 64; rem != 0)
            words_.back() &= (~0ull) >> (64 - rem);
        check_exponents();
    }

    void check_exponents() const {
        constexpr std::int64_t kMax = std::int64_t{1} << 62;
        if (nbits_ < 0 || std::abs(order_) >= kMax || nbits_ >= kMax ||
            (nbits_ > 0 && std::abs(order_ + nbits_ - 1) >= kMax))
            throw capacity_error("polynomial exponent range exceeds capacity");
    }

    std::int64_t order_ = 0; // exponent of bit 0; 0 for the zero polynomial
    std::int64_t nbits_ = 0; // coefficient string length; 0 = zero
    std::vector<std::uint64_t> words_;

    friend std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly&,
                                                      const LaurentPoly&);
};

/// Quotient and remainder of f by g: f = g*q + r with r = 0 or
/// ord(f) <= ord(r) <= deg(r) < ord(f) + (deg(g) - ord(g)).
inline std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& f,
                                                  const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (f.is_zero()) return {LaurentPoly::zero(), LaurentPoly::zero()};
    const std::int64_t nf = f.span_bits(), ng = g.span_bits();
    if (nf < ng) return {LaurentPoly::zero(), f};
    std::vector<std::uint64_t> R(f.words_);
    R.resize(detail::words_for(nf) + 2, 0);
    const std::int64_t nq = nf - ng + 1;
    std::vector<std::uint64_t> Q(detail::words_for(nq) + 1, 0);
    detail::div_words(R, nf, g.words_.data(), ng, Q);
    LaurentPoly q = LaurentPoly::normalized(f.ord() - g.ord(), std::move(Q), nq);
    LaurentPoly r = LaurentPoly::normalized(f.ord(), std::move(R),
                                            std::max<std::int64_t>(ng - 1, 0));
    return {q, r};
}

/// Does d divide f?  By convention 0 divides only 0; monomials divide
/// everything.
inline bool divides(const LaurentPoly& d, const LaurentPoly& f) {
    if (d.is_zero()) return f.is_zero();
    if (f.is_zero() || d.is_monomial()) return true;
    if (f.span_bits() < d.span_bits()) return false;
    return divmod(f, d).second.is_zero();
}

/// Strips the unit monomial factor: returns (f * z^{-ord f}, ord f).
inline std::pair<LaurentPoly, std::int64_t> to_plain(const LaurentPoly& f) {
    if (f.is_zero())
        throw std::domain_error("to_plain() of the zero polynomial");
    std::int64_t o = f.ord();
    return {f.shifted(-o), o};
}

/// Grammar: terms `0 | 1 | z | z^<int>` joined by `+`, arbitrary whitespace;
/// duplicate exponents cancel (characteristic 2).
inline LaurentPoly parse_poly(std::string_view text) {
    std::set<std::int64_t> exps;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto toggle = [&](std::int64_t e) {
        if (auto it = exps.find(e); it != exps.end())
            exps.erase(it);
        else
            exps.insert(e);
    };
    auto parse_int = [&]() -> std::int64_t {
        std::size_t start = i;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected integer exponent", start);
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > (std::int64_t{1} << 60))
                throw parse_error("exponent too large", start);
            ++i;
        }
        return neg ? -v : v;
    };

    skip_ws();
    if (i >= text.size()) throw parse_error("empty polynomial text", i);
    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (expect_term) throw parse_error("dangling '+'", i);
            break;
        }
        if (!expect_term) {
            if (text[i] != '+')
                throw parse_error("expected '+' between terms", i);
            ++i;
            expect_term = true;
            continue;
        }
        char c = text[i];
        if (c == '0') {
            ++i; // the zero term contributes nothing
        } else if (c == '1') {
            ++i;
            toggle(0);
        } else if (c == 'z') {
            ++i;
            std::int64_t e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                e = parse_int();
            }
            toggle(e);
        } else {
            throw parse_error("expected term '0', '1', 'z' or 'z^<int>'", i);
        }
        expect_term = false;
    }
    return LaurentPoly::from_exponents(exps);
}

/// Ascending exponents joined by " + "; the zero polynomial prints as "0".
inline std::string format_poly(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::int64_t e : f.exponents()) {
        if (!out.empty()) out += " + ";
        if (e == 0)
            out += "1";
        else if (e == 1)
            out += "z";
        else
            out += "z^" + std::to_string(e);
    }
    return out;
}

} // namespace lampeq
