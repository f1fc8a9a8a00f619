#include <doctest.h>

#include <random>

#include "lampeq/lamplighter.hpp"
#include "lampeq/tracer.hpp"
#include "test_util.hpp"

using namespace lampeq;
using testutil::random_poly;

namespace {
Word W(const char* text) { return parse_word(text); }
LaurentPoly P(const char* text) { return parse_poly(text); }

Word random_full_word(std::mt19937_64& rng, int maxlen) {
    std::uniform_int_distribution<int> len(0, maxlen), pick(0, 5);
    Word w;
    for (int k = len(rng); k > 0; --k)
        w.push_back({static_cast<Gen>(pick(rng) / 2), pick(rng) % 2 ? -1 : 1});
    return w;
}
} // namespace

TEST_CASE("figure word trace") {
    TraceResult tr = trace(W("t^2 a x t^-1 x^-2 a"));
    CHECK(tr.x_w == -1);
    CHECK(tr.t_w == 1);
    CHECK(tr.N == GridPointSet{{0, 0}, {1, 1}});
    CHECK(tr.D == GridPointSet{{1, 0}, {2, 0}, {2, 1}});
    CHECK(tr.num == from_grid(tr.N));
    CHECK(tr.den == from_grid(tr.D));
    CHECK(tr.num.instantiate(1) == P("1 + z^2"));
    CHECK(tr.den.instantiate(1) == P("z + z^2 + z^3"));
}

TEST_CASE("empty word trace") {
    TraceResult tr = trace({});
    CHECK(tr.x_w == 0);
    CHECK(tr.t_w == 0);
    CHECK(tr.num.is_trivial());
    CHECK(tr.den.is_trivial());
    CHECK(tr.N.empty());
    CHECK(tr.D.empty());
}

TEST_CASE("commutator word trace") {
    TraceResult tr = trace(W("x t x^-1 t^-1"));
    CHECK(tr.x_w == 0);
    CHECK(tr.t_w == 0);
    CHECK(tr.N.empty());
    CHECK(tr.D == GridPointSet{{1, 0}, {1, 1}});
}

TEST_CASE("path records the visited vertices") {
    TraceResult tr = trace(W("t^2 a x t^-1 x^-2 a"), true);
    std::vector<GridPoint> expected{{0, 0}, {1, 0}, {2, 0}, {2, 1},
                                    {1, 1}, {1, 0}, {1, -1}};
    CHECK(tr.path == expected);
    CHECK(trace(W("t"), false).path.empty());
}

TEST_CASE("instantiate_num_den matches the parametric route") {
    auto [num1, den1] = instantiate_num_den(W("t^2 a x t^-1 x^-2 a"), 1);
    CHECK(num1 == P("1 + z^2"));
    CHECK(den1 == P("z + z^2 + z^3"));

    std::mt19937_64 rng(321);
    std::uniform_int_distribution<std::int64_t> dd(-20, 20);
    for (int trial = 0; trial < 2'000; ++trial) {
        Word w = random_full_word(rng, 32);
        std::int64_t d = dd(rng);
        TraceResult tr = trace(w);
        auto [num, den] = instantiate_num_den(w, d);
        REQUIRE(num == tr.num.instantiate(d));
        REQUIRE(den == tr.den.instantiate(d));
    }
}

TEST_CASE("quadratic family fixture (n = 3)") {
    Word w = W("t^-2 x^2 a t^-1 x^-3 a");
    TraceResult tr = trace(w);
    CHECK(tr.x_w == -1);
    CHECK(tr.t_w == -3);
    auto [num, den] = instantiate_num_den(w, -3);
    CHECK(num == P("z^-8 + 1"));
    CHECK(den == P("z^-9 + z^-8 + z^-6 + z^-5 + z^-3"));
}

TEST_CASE("magnus generator fixtures") {
    MagnusMatrix ma = magnus(W("a"));
    CHECK(ma.corner_x == 0);
    CHECK(ma.corner_t == 0);
    CHECK(ma.num == ParametricPoly::monomial(0, 0));
    CHECK(ma.den.is_trivial());

    MagnusMatrix mx = magnus(W("x"));
    CHECK(mx.corner_x == -1);
    CHECK(mx.corner_t == 0);
    CHECK(mx.num.is_trivial());
    CHECK(mx.den == ParametricPoly::monomial(0, 0));

    MagnusMatrix mfig = magnus(W("t^2 a x t^-1 x^-2 a"));
    TraceResult tr = trace(W("t^2 a x t^-1 x^-2 a"));
    CHECK(mfig.corner_x == -tr.x_w);
    CHECK(mfig.corner_t == -tr.t_w);
    CHECK(mfig.num == tr.num);
    CHECK(mfig.den == tr.den);
}

TEST_CASE("magnus agrees with trace on random words") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 2'000; ++trial) {
        Word w = random_full_word(rng, 64);
        TraceResult tr = trace(w);
        MagnusMatrix m = magnus(w);
        REQUIRE(m.corner_x == -tr.x_w);
        REQUIRE(m.corner_t == -tr.t_w);
        REQUIRE(m.num == tr.num);
        REQUIRE(m.den == tr.den);
    }
}

TEST_CASE("magnus is a homomorphism") {
    std::mt19937_64 rng(86);
    for (int trial = 0; trial < 1'000; ++trial) {
        Word u = random_full_word(rng, 24);
        Word v = random_full_word(rng, 24);
        REQUIRE(magnus(concat(u, v)) == magnus(u) * magnus(v));
    }
}

TEST_CASE("substitution identity") {
    std::mt19937_64 rng(6006);
    std::uniform_int_distribution<std::int64_t> dd(-16, 16);
    for (int trial = 0; trial < 2'000; ++trial) {
        Word w = random_full_word(rng, 24);
        GroupElement x{dd(rng), random_poly(rng, 32)};
        TraceResult tr = trace(w);
        GroupElement direct = substitute(w, x);
        GroupElement formula{
            tr.t_w + x.delta * tr.x_w,
            tr.num.instantiate(x.delta) +
                x.lamps * tr.den.instantiate(x.delta)};
        REQUIRE(direct == formula);
    }
}

TEST_CASE("grid containment within [-|w|, |w|]^2") {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 2'000; ++trial) {
        Word w = random_full_word(rng, 24);
        const std::int64_t len = static_cast<std::int64_t>(w.size());
        TraceResult tr = trace(w);
        for (const GridPoint& p : tr.N) {
            REQUIRE(std::abs(p.x) <= len);
            REQUIRE(std::abs(p.t) <= len);
        }
        for (const GridPoint& p : tr.D) {
            REQUIRE(std::abs(p.x) <= len);
            REQUIRE(std::abs(p.t) <= len);
        }
        if (tr.x_w != 0 && tr.t_w % tr.x_w == 0) {
            std::int64_t d = -tr.t_w / tr.x_w;
            if (d != 0) {
                CHECK(std::abs(d) >= 1);
                CHECK(std::abs(d) <= len);
            }
            auto [num, den] = instantiate_num_den(w, d);
            for (const LaurentPoly* p : {&num, &den})
                if (!p->is_zero()) {
                    CHECK(std::abs(p->ord()) <= len * len + len);
                    CHECK(std::abs(p->deg()) <= len * len + len);
                }
        }
    }
}
