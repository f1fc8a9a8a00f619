#pragma once

// Group words over {a, t, x} with inverses: parsing, formatting, free
// reduction and uniform sampling of freely reduced words.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lampeq/errors.hpp"

namespace lampeq {

enum class Gen : std::uint8_t { A = 0, T = 1, X = 2 };

struct Letter {
    Gen gen;
    int sign; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

inline Word concat(const Word& u, const Word& v) {
    Word out(u);
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

struct ExponentSums {
    std::int64_t a = 0, t = 0, x = 0;

    friend bool operator==(const ExponentSums&, const ExponentSums&) = default;
};

inline ExponentSums exponent_sums(const Word& w) {
    ExponentSums s;
    for (const Letter& l : w) {
        switch (l.gen) {
        case Gen::A: s.a += l.sign; break;
        case Gen::T: s.t += l.sign; break;
        case Gen::X: s.x += l.sign; break;
        }
    }
    return s;
}

inline Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back() == inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

namespace detail {

inline std::optional<Letter> letter_of(char c) {
    switch (c) {
    case 'a': return Letter{Gen::A, +1};
    case 't': return Letter{Gen::T, +1};
    case 'x': return Letter{Gen::X, +1};
    case 'A': return Letter{Gen::A, -1};
    case 'T': return Letter{Gen::T, -1};
    case 'X': return Letter{Gen::X, -1};
    default: return std::nullopt;
    }
}

struct WordParser {
    std::string_view text;
    std::size_t i = 0;

    void skip_ws() {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    }

    std::int64_t parse_exponent() {
        std::size_t start = i;
        bool neg = false;
        if (i < text.size() && text[i] == '-') {
            neg = true;
            ++i;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected integer after '^'", start);
        std::int64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            if (v > 1'000'000)
                throw parse_error("word exponent too large", start);
            ++i;
        }
        return neg ? -v : v;
    }

    void append_power(Word& out, const Word& base, std::int64_t k) {
        const Word rep = k >= 0 ? base : inverse(base);
        for (std::int64_t n = std::abs(k); n > 0; --n)
            out.insert(out.end(), rep.begin(), rep.end());
    }

    Word parse_sequence(bool inside_group) {
        Word out;
        while (true) {
            skip_ws();
            if (i >= text.size()) {
                if (inside_group)
                    throw parse_error("unterminated '('", i);
                return out;
            }
            char c = text[i];
            if (c == ')') {
                if (!inside_group)
                    throw parse_error("unmatched ')'", i);
                return out;
            }
            if (c == '(') {
                std::size_t open = i++;
                Word group = parse_sequence(true);
                if (i >= text.size() || text[i] != ')')
                    throw parse_error("unterminated '('", open);
                ++i;
                std::int64_t k = 1;
                skip_ws();
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    k = parse_exponent();
                }
                append_power(out, group, k);
                continue;
            }
            auto l = letter_of(c);
            if (!l)
                throw parse_error("expected letter a/t/x (or inverse A/T/X)", i);
            ++i;
            std::int64_t k = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                k = parse_exponent();
            }
            append_power(out, Word{*l}, k);
        }
    }
};

} // namespace detail

/// Atoms `a t x A T X` (capitals = inverses), optional `^<int>` exponents,
/// parenthesized groups `(...)^<int>`, arbitrary whitespace.
inline Word parse_word(std::string_view text) {
    detail::WordParser p{text};
    Word w = p.parse_sequence(false);
    return w;
}

/// Lowercase letters with run-length exponents: `t^2 a x t^-1 x^-2 a`.
inline std::string format_word(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        std::int64_t k = static_cast<std::int64_t>(j - i) * w[i].sign;
        if (!out.empty()) out += ' ';
        switch (w[i].gen) {
        case Gen::A: out += 'a'; break;
        case Gen::T: out += 't'; break;
        case Gen::X: out += 'x'; break;
        }
        if (k != 1) out += "^" + std::to_string(k);
        i = j;
    }
    return out;
}

/// Uniform element of the sphere of radius m in F(a,t,x): first letter uniform
/// over the six generators, each following letter uniform over the five that
/// do not cancel.  The generator is caller-owned, so parallel sampling uses
/// independently seeded engines.
inline Word random_word(std::int64_t m, std::mt19937_64& rng) {
    static constexpr Letter kAlphabet[6] = {
        {Gen::A, +1}, {Gen::A, -1}, {Gen::T, +1},
        {Gen::T, -1}, {Gen::X, +1}, {Gen::X, -1},
    };
    auto index_of = [](Letter l) {
        return static_cast<int>(l.gen) * 2 + (l.sign < 0 ? 1 : 0);
    };
    Word w;
    w.reserve(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        if (w.empty()) {
            std::uniform_int_distribution<int> d(0, 5);
            w.push_back(kAlphabet[d(rng)]);
        } else {
            int banned = index_of(inverse(w.back()));
            std::uniform_int_distribution<int> d(0, 4);
            int r = d(rng);
            if (r >= banned) ++r;
            w.push_back(kAlphabet[r]);
        }
    }
    return w;
}

} // namespace lampeq
