#include <doctest.h>

#include <random>

#include "lampeq/lamplighter.hpp"
#include "test_util.hpp"

using namespace lampeq;
using testutil::random_poly;

namespace {

Word W(const char* text) { return parse_word(text); }
LaurentPoly P(const char* text) { return parse_poly(text); }

GroupElement random_element(std::mt19937_64& rng, std::int64_t max_size) {
    std::uniform_int_distribution<std::int64_t> d(-max_size, max_size);
    return {d(rng), random_poly(rng, max_size)};
}

// Closed commutation formulas; over GF(2) all signs collapse to +.
GroupElement commutator_closed(const GroupElement& g, const GroupElement& h) {
    LaurentPoly f = g.lamps * (LaurentPoly::one() + LaurentPoly::monomial(-h.delta));
    LaurentPoly f1 = h.lamps * (LaurentPoly::one() + LaurentPoly::monomial(-g.delta));
    return {0, f + f1};
}

GroupElement conjugate_closed(const GroupElement& g, const GroupElement& h) {
    LaurentPoly lamps =
        h.lamps * (LaurentPoly::one() + LaurentPoly::monomial(-g.delta)) +
        g.lamps.shifted(-h.delta);
    return {g.delta, lamps};
}

} // namespace

TEST_CASE("multiplication fixtures") {
    CHECK(mul(gen_t(), gen_a()) == GroupElement{1, P("1")});
    CHECK(mul(gen_a(), gen_t()) == GroupElement{1, P("z^-1")});
    GroupElement g{3, P("z^-1 + z^2")};
    CHECK(mul(g, identity_element()) == g);
    CHECK(mul(identity_element(), g) == g);
}

TEST_CASE("inverse fixtures") {
    CHECK(inv(gen_t()) == GroupElement{-1, LaurentPoly::zero()});
    CHECK(inv(gen_a()) == gen_a());
    CHECK(inv(GroupElement{1, P("z^-1")}) == GroupElement{-1, P("1")});
}

TEST_CASE("commutator fixtures") {
    CHECK(commutator(gen_t(), gen_t()) == identity_element());
    CHECK(commutator(gen_a(), gen_a()) == identity_element());
    GroupElement c = commutator(gen_a(), gen_t());
    CHECK(c == commutator_closed(gen_a(), gen_t()));
    CHECK(c == GroupElement{0, P("1 + z^-1")});
}

TEST_CASE("group laws on random elements") {
    std::mt19937_64 rng(314);
    for (int trial = 0; trial < 10'000; ++trial) {
        GroupElement g = random_element(rng, 24);
        GroupElement h = random_element(rng, 24);
        GroupElement k = random_element(rng, 24);
        REQUIRE(mul(mul(g, h), k) == mul(g, mul(h, k)));
        REQUIRE(mul(g, inv(g)) == identity_element());
        REQUIRE(mul(inv(g), g) == identity_element());
        REQUIRE(mul(g, identity_element()) == g);
    }
}

TEST_CASE("closed formulas match direct products") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 10'000; ++trial) {
        GroupElement g = random_element(rng, 16);
        GroupElement h = random_element(rng, 16);
        REQUIRE(commutator(g, h) == commutator_closed(g, h));
        REQUIRE(conjugate(g, h) == conjugate_closed(g, h));
    }
}

TEST_CASE("relator checks") {
    CHECK(mul(gen_a(), gen_a()) == identity_element());
    for (int i = -8; i <= 8; ++i) {
        for (int j = -8; j <= 8; ++j) {
            GroupElement ti{i, LaurentPoly::zero()};
            GroupElement tj{j, LaurentPoly::zero()};
            GroupElement ai = conjugate(gen_a(), ti);
            GroupElement aj = conjugate(gen_a(), tj);
            REQUIRE(commutator(ai, aj) == identity_element());
        }
    }
}

TEST_CASE("eval_word fixtures") {
    CHECK(eval_word(W("t a t^-1")) == GroupElement{0, P("z")});
    CHECK(eval_word(W("a a")) == identity_element());
    CHECK(eval_word(W("a t^2 a t^-2")) == GroupElement{0, P("1 + z^2")});
    CHECK_THROWS_AS(eval_word(W("a x t")), std::invalid_argument);
}

TEST_CASE("eval_word agrees with folding mul over letters") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 2'000; ++trial) {
        Word w;
        std::uniform_int_distribution<int> len(0, 24), pick(0, 3);
        for (int k = len(rng); k > 0; --k) {
            int r = pick(rng);
            w.push_back({r / 2 == 0 ? Gen::A : Gen::T, r % 2 ? -1 : 1});
        }
        GroupElement folded = identity_element();
        for (const Letter& l : w) folded = mul(folded, element_of(l));
        REQUIRE(eval_word(w) == folded);
    }
}

TEST_CASE("eval_word is a homomorphism") {
    std::mt19937_64 rng(66);
    std::uniform_int_distribution<int> len(0, 16), pick(0, 3);
    auto rand_const_word = [&] {
        Word w;
        for (int k = len(rng); k > 0; --k) {
            int r = pick(rng);
            w.push_back({r / 2 == 0 ? Gen::A : Gen::T, r % 2 ? -1 : 1});
        }
        return w;
    };
    for (int trial = 0; trial < 2'000; ++trial) {
        Word u = rand_const_word(), v = rand_const_word();
        REQUIRE(eval_word(concat(u, v)) == mul(eval_word(u), eval_word(v)));
    }
}

TEST_CASE("substitute fixtures") {
    CHECK(substitute(W("a x t^-1"), GroupElement{1, P("z^-1")}) == identity_element());
    GroupElement g{-2, P("1 + z")};
    CHECK(substitute(W("x"), g) == g);
    CHECK(substitute(W("x x^-1"), g) == identity_element());
}

TEST_CASE("pair_to_word fixtures and round trip") {
    CHECK(format_word(pair_to_word(GroupElement{0, P("z^2")})) == "t^2 a t^-2");
    CHECK(pair_to_word(identity_element()).empty());
    CHECK(format_word(pair_to_word(GroupElement{1, P("z^-1")})) == "a t");

    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> d(-64, 64);
    for (int trial = 0; trial < 1'000; ++trial) {
        GroupElement g{d(rng), random_poly(rng, 64)};
        REQUIRE(eval_word(pair_to_word(g)) == g);
    }
}
