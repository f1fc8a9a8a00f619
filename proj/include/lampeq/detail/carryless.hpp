#pragma once

// Word-level carry-less (GF(2)[z]) kernels: row accumulation, schoolbook and
// Karatsuba multiplication, and blockwise synthetic division.  Polynomials are
// little-endian bit vectors: bit k of word k/64 is the coefficient of z^k.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace lampeq::detail {

inline std::size_t words_for(std::int64_t nbits) {
    return static_cast<std::size_t>((nbits + 63) / 64);
}

inline bool clmul_hw_available() {
#if defined(__x86_64__)
    static const bool ok =
        __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("sse4.1");
    return ok;
#else
    return false;
#endif
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse4.1"))) inline void
acc_row_pclmul(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
               std::uint64_t m) {
    const __m128i mm = _mm_set_epi64x(0, static_cast<long long>(m));
    for (std::size_t i = 0; i < n; ++i) {
        __m128i s = _mm_set_epi64x(0, static_cast<long long>(src[i]));
        __m128i p = _mm_clmulepi64_si128(s, mm, 0x00);
        dst[i] ^= static_cast<std::uint64_t>(_mm_cvtsi128_si64(p));
        dst[i + 1] ^= static_cast<std::uint64_t>(_mm_extract_epi64(p, 1));
    }
}
#endif

// 8-bit window table: t[v] = v (x) m as a 128-bit product.
struct ClmulTable {
    std::uint64_t lo[256];
    std::uint64_t hi[256];

    explicit ClmulTable(std::uint64_t m) {
        lo[0] = 0;
        hi[0] = 0;
        for (unsigned v = 1; v < 256; ++v) {
            if (v & 1u) {
                lo[v] = lo[v ^ 1u] ^ m;
                hi[v] = hi[v ^ 1u];
            } else {
                unsigned u = v >> 1;
                lo[v] = lo[u] << 1;
                hi[v] = (hi[u] << 1) | (lo[u] >> 63);
            }
        }
    }
};

inline void acc_row_portable(std::uint64_t* dst, const std::uint64_t* src,
                             std::size_t n, const ClmulTable& t) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t w = src[i];
        std::uint64_t lo = t.lo[w & 0xffu];
        std::uint64_t hi = t.hi[w & 0xffu];
        for (int k = 1; k < 8; ++k) {
            unsigned b = static_cast<unsigned>((w >> (8 * k)) & 0xffu);
            lo ^= t.lo[b] << (8 * k);
            hi ^= (t.hi[b] << (8 * k)) | (t.lo[b] >> (64 - 8 * k));
        }
        dst[i] ^= lo;
        dst[i + 1] ^= hi;
    }
}

// dst[0..n] ^= src (x) m.  dst must have n+1 writable words.
struct RowMul {
    std::uint64_t m;

    explicit RowMul(std::uint64_t multiplier) : m(multiplier) {}

    void accumulate(std::uint64_t* dst, const std::uint64_t* src,
                    std::size_t n) const {
        if (n == 0 || m == 0) return;
#if defined(__x86_64__)
        if (clmul_hw_available()) {
            acc_row_pclmul(dst, src, n, m);
            return;
        }
#endif
        ClmulTable t(m);
        acc_row_portable(dst, src, n, t);
    }
};

// One-off 64x64 -> 128 product, used by the division block update.
inline void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t& lo,
                    std::uint64_t& hi) {
    std::uint64_t l = 0, h = 0;
    while (b) {
        int i = __builtin_ctzll(b);
        b &= b - 1;
        l ^= a << i;
        h ^= (i == 0) ? 0 : (a >> (64 - i));
    }
    lo = l;
    hi = h;
}

inline void xor_into(std::uint64_t* dst, const std::uint64_t* src,
                     std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

// dst ^= src << shift (bit shift, shift >= 0); src holds src_words words.
// dst must be writable for src_words + shift/64 + 1 words past the offset.
inline void xor_shifted(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t src_words, std::int64_t shift) {
    std::size_t wo = static_cast<std::size_t>(shift / 64);
    int bo = static_cast<int>(shift % 64);
    if (bo == 0) {
        xor_into(dst + wo, src, src_words);
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src_words; ++i) {
        dst[wo + i] ^= (src[i] << bo) | carry;
        carry = src[i] >> (64 - bo);
    }
    dst[wo + src_words] ^= carry;
}

// Reads the 64 bits starting at bit index `start` (negative or out-of-range
// positions read as 0).
inline std::uint64_t read_bits64(const std::uint64_t* words,
                                 std::size_t nwords, std::int64_t start) {
    std::uint64_t out = 0;
    if (start >= 0 && start % 64 == 0) {
        std::size_t w = static_cast<std::size_t>(start / 64);
        return w < nwords ? words[w] : 0;
    }
    std::int64_t w0 = start >= 0 ? start / 64 : (start - 63) / 64;
    int bo = static_cast<int>(start - w0 * 64);
    auto word_at = [&](std::int64_t w) -> std::uint64_t {
        return (w >= 0 && static_cast<std::size_t>(w) < nwords)
                   ? words[static_cast<std::size_t>(w)]
                   : 0;
    };
    out = word_at(w0) >> bo;
    if (bo) out |= word_at(w0 + 1) << (64 - bo);
    return out;
}

constexpr std::size_t kKaratsubaThresholdWords = 64; // 4096 bits

inline void mul_schoolbook(std::uint64_t* dst, const std::uint64_t* a,
                           std::size_t na, const std::uint64_t* b,
                           std::size_t nb) {
    if (na > nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    for (std::size_t i = 0; i < na; ++i)
        RowMul(a[i]).accumulate(dst + i, b, nb);
}

// dst (na+nb zeroed words) = a (x) b.
inline void mul_words(std::uint64_t* dst, const std::uint64_t* a,
                      std::size_t na, const std::uint64_t* b, std::size_t nb) {
    if (na == 0 || nb == 0) return;
    if (std::min(na, nb) <= kKaratsubaThresholdWords) {
        mul_schoolbook(dst, a, na, b, nb);
        return;
    }
    const std::size_t m = std::max(na, nb) / 2;
    if (na <= m || nb <= m) {
        // Unbalanced: split the longer operand only.
        if (na > nb) {
            std::swap(a, b);
            std::swap(na, nb);
        }
        mul_words(dst, a, na, b, m);
        std::vector<std::uint64_t> t(na + nb - m, 0);
        mul_words(t.data(), a, na, b + m, nb - m);
        xor_into(dst + m, t.data(), t.size());
        return;
    }
    const std::size_t na1 = na - m, nb1 = nb - m;
    std::vector<std::uint64_t> z0(2 * m, 0);
    std::vector<std::uint64_t> z2(na1 + nb1, 0);
    mul_words(z0.data(), a, m, b, m);
    mul_words(z2.data(), a + m, na1, b + m, nb1);

    std::vector<std::uint64_t> ta(std::max(m, na1), 0);
    std::vector<std::uint64_t> tb(std::max(m, nb1), 0);
    std::copy(a, a + m, ta.begin());
    xor_into(ta.data(), a + m, na1);
    std::copy(b, b + m, tb.begin());
    xor_into(tb.data(), b + m, nb1);

    std::vector<std::uint64_t> z1(ta.size() + tb.size(), 0);
    mul_words(z1.data(), ta.data(), ta.size(), tb.data(), tb.size());
    xor_into(z1.data(), z0.data(), z0.size());
    xor_into(z1.data(), z2.data(), z2.size());

    xor_into(dst, z0.data(), z0.size());
    xor_into(dst + m, z1.data(), z1.size());
    xor_into(dst + 2 * m, z2.data(), z2.size());
}

// Synthetic division of F (nf bits, in R) by G (ng bits, top bit set).
// On return R holds the remainder (meaningful bits < ng-1 .. 0) and Q the
// quotient (nf-ng+1 bits).  R must be sized words_for(nf) + 2; Q zeroed and
// sized words_for(nf-ng+1).  Quotient bits are produced 64 at a time: the
// block's bits are derived from the top 64 remainder bits against the top 64
// divisor bits, then one carry-less row pass applies q*G to R.
inline void div_words(std::vector<std::uint64_t>& R, std::int64_t nf,
                      const std::uint64_t* G, std::int64_t ng,
                      std::vector<std::uint64_t>& Q) {
    if (nf < ng) return;
    const std::size_t ngw = words_for(ng);
    const std::int64_t nq = nf - ng + 1;
    const std::uint64_t gtop = read_bits64(G, ngw, ng - 64);
    std::vector<std::uint64_t> T(ngw + 1);
    std::int64_t s_top = nq - 1;
    while (s_top >= 0) {
        const std::int64_t k = std::min<std::int64_t>(64, s_top + 1);
        const std::int64_t hi = s_top + ng - 1;
        std::uint64_t rtop = read_bits64(R.data(), R.size(), hi - 63);
        std::uint64_t q = 0;
        for (std::int64_t j = 0; j < k; ++j) {
            if ((rtop >> (63 - j)) & 1u) {
                q |= 1ull << (63 - j);
                rtop ^= gtop >> j;
            }
        }
        const std::uint64_t qpoly = (k == 64) ? q : (q >> (64 - k));
        if (qpoly) {
            std::fill(T.begin(), T.end(), 0);
            RowMul(qpoly).accumulate(T.data(), G, ngw);
            xor_shifted(R.data(), T.data(), T.size(), s_top - k + 1);
            xor_shifted(Q.data(), &qpoly, 1, s_top - k + 1);
        }
        s_top -= k;
    }
}

} // namespace lampeq::detail
