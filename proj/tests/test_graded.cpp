#include <arrc/genera.hpp>
#include <arrc/graded.hpp>

#include <doctest.h>

using namespace arrc;
using namespace arrc::graded;

namespace {

struct TestRng {
    std::uint64_t s;
    explicit TestRng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

GradedElement random_element(const RingPtr& ring, TestRng& rng) {
    GradedElement e(ring);
    const size_t n = ring->generators().size();
    for (int term = 0; term < 6; ++term) {
        Monomial m(n, 0);
        for (size_t i = 0; i < n; ++i) m[i] = static_cast<int>(rng.range(0, 2));
        e.add_term(m, Constant(rat(rng.range(-6, 6), rng.range(1, 5))));
    }
    return e;
}

RingPtr xw_ring(int trunc) {
    return Ring::make({{"w", Locus::base, 1}, {"x", Locus::fiber, 1}}, trunc);
}

}  // namespace

TEST_CASE("truncated products") {
    auto r1 = Ring::make({{"x", Locus::fiber, 1}}, 1);
    GradedElement one = GradedElement::scalar(r1, Constant(1));
    GradedElement x = GradedElement::generator(r1, "x");
    CHECK((one + x) * (one - x) == one);

    auto r2 = Ring::make({{"x", Locus::fiber, 1}}, 2);
    GradedElement one2 = GradedElement::scalar(r2, Constant(1));
    GradedElement x2 = GradedElement::generator(r2, "x");
    GradedElement sq = (one2 + x2) * (one2 + x2);
    GradedElement expect = one2;
    {
        GradedElement t = x2;
        t.scale(Constant(rat(2)));
        expect += t;
        expect += x2 * x2;
    }
    CHECK(sq == expect);
}

TEST_CASE("the equivariant Todd product before degree extraction") {
    auto ring = xw_ring(2);
    GradedElement one = GradedElement::scalar(ring, Constant(1));
    GradedElement x = GradedElement::generator(ring, "x");
    GradedElement w = GradedElement::generator(ring, "w");

    GradedElement a = GradedElement::scalar(ring, Constant(rat(1, 2)));
    {
        GradedElement t = x;
        t.scale(Constant(rat(-1, 4)));
        a += t;
    }
    GradedElement b = one;
    {
        GradedElement t = w;
        t.scale(Constant(rat(-1, 2)));
        b += t;
        GradedElement t2 = w * w;
        t2.scale(Constant(rat(1, 12)));
        b += t2;
    }
    GradedElement prod = a * b;
    CHECK(prod.to_string() == "1/2 - 1/4*w - 1/4*x + 1/8*w*x + 1/24*w^2");
    CHECK(prod.coefficient({1, 1}) == Constant(rat(1, 8)));

    GradedElement deg2 = degree_part(prod, 2);
    CHECK(deg2.to_string() == "1/8*w*x + 1/24*w^2");
    CHECK(degree_part(prod, 0) == GradedElement::scalar(ring, Constant(rat(1, 2))));
    CHECK_THROWS_AS(degree_part(prod, 3), std::invalid_argument);

    GradedElement simple = one + x + x * x;
    {
        GradedElement t = GradedElement::generator(ring, "x");
        CHECK(degree_part(simple, 1) == t);
    }
}

TEST_CASE("ring axioms on random elements at truncations 1 through 4") {
    TestRng rng(23);
    for (int trunc = 1; trunc <= 4; ++trunc) {
        auto ring = xw_ring(trunc);
        for (int i = 0; i < 12; ++i) {
            GradedElement a = random_element(ring, rng);
            GradedElement b = random_element(ring, rng);
            GradedElement c = random_element(ring, rng);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
        }
    }
}

TEST_CASE("context mismatches are rejected") {
    auto r1 = xw_ring(2);
    auto r2 = xw_ring(3);
    GradedElement a = GradedElement::generator(r1, "x");
    GradedElement b = GradedElement::generator(r2, "x");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("series substitution") {
    auto ring = Ring::make({{"x", Locus::fiber, 1}}, 2);
    GradedElement x = GradedElement::generator(ring, "x");

    GradedElement e = genera::series_substitute(genera::ch_series(2), x);
    CHECK(e.to_string() == "1 + 1*x + 1/2*x^2");

    GradedElement ti = genera::series_substitute(genera::todd_inv_series(2), x);
    CHECK(ti.to_string() == "1 - 1/2*x + 1/6*x^2");

    GradedElement zero = GradedElement::zero(ring);
    GradedElement at_zero = genera::series_substitute(genera::todd_inv_series(2), zero);
    CHECK(at_zero == GradedElement::scalar(ring, Constant(1)));

    GradedElement unit = GradedElement::scalar(ring, Constant(1));
    CHECK_THROWS_AS(genera::series_substitute(genera::ch_series(2), unit), std::invalid_argument);
}

TEST_CASE("unit inversion") {
    auto ring = Ring::make({{"x", Locus::fiber, 1}}, 2);
    GradedElement one = GradedElement::scalar(ring, Constant(1));
    GradedElement x = GradedElement::generator(ring, "x");

    GradedElement a = one;
    {
        GradedElement t = x;
        t.scale(Constant(rat(1, 2)));
        a += t;
        GradedElement t2 = x * x;
        t2.scale(Constant(rat(1, 4)));
        a += t2;
    }
    GradedElement inv = invert_unit(a);
    GradedElement expect = one;
    {
        GradedElement t = x;
        t.scale(Constant(rat(-1, 2)));
        expect += t;
    }
    CHECK(inv == expect);  // the x^2 coefficient cancels exactly
    CHECK(invert_unit(one) == one);

    auto r1 = Ring::make({{"x", Locus::fiber, 1}}, 1);
    GradedElement two_px = GradedElement::scalar(r1, Constant(rat(2))) +
                           GradedElement::generator(r1, "x");
    GradedElement got = invert_unit(two_px);
    GradedElement want = GradedElement::scalar(r1, Constant(rat(1, 2)));
    {
        GradedElement t = GradedElement::generator(r1, "x");
        t.scale(Constant(rat(-1, 4)));
        want += t;
    }
    CHECK(got == want);

    TestRng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto ring2 = xw_ring(static_cast<int>(rng.range(1, 4)));
        GradedElement u = random_element(ring2, rng);
        Monomial empty(2, 0);
        Rat c0 = rat(rng.range(1, 9));
        if (rng.range(0, 1)) c0 = -c0;
        u.add_term(empty, Constant(c0) - u.coefficient(empty));
        GradedElement prod = invert_unit(u) * u;
        CHECK(prod == GradedElement::scalar(ring2, Constant(1)));
    }

    GradedElement no_unit = x;
    CHECK_THROWS_AS(invert_unit(no_unit), std::invalid_argument);
    GradedElement sym = one + GradedElement::scalar(
        ring, Constant::symbol(TranscendentalSymbol::log_pi()));
    CHECK_THROWS_AS(invert_unit(sym), std::invalid_argument);
}

TEST_CASE("projective pushforward rules") {
    auto ring = Ring::make({{"x", Locus::fiber, 1}, {"t", Locus::base, 1}}, 3);

    // x^{g-1} -> 1 at g = 3
    GradedElement x2 = pow(GradedElement::generator(ring, "x"), 2);
    GradedElement pushed = pushforward_projective(x2, 3);
    CHECK(pushed.constant_term() == Constant(1));
    CHECK(pushed == GradedElement::scalar(pushed.ring(), Constant(1)));

    // x^g at g = 2: harmonic part on the analytic line plus the base class
    GradedElement xg = pow(GradedElement::generator(ring, "x"), 2);
    GradedElement img = pushforward_projective(xg, 2);
    CHECK(img.coefficient({1, 0}) == Constant(1));  // cst coefficient H_1 = 1
    CHECK(img.coefficient({0, 1}) == Constant(1));  // t coefficient
    CHECK(img.to_string() == "1*cst + 1*t");

    // degree below the fiber dimension vanishes
    GradedElement x1 = GradedElement::generator(ring, "x");
    CHECK(pushforward_projective(x1, 3).is_zero());

    // fiber powers above g sit outside the registered rule set
    auto table = projective_pushforward_table(ring, 2, "t", "cst", 2);
    GradedElement x3 = pow(GradedElement::generator(ring, "x"), 3);
    CHECK_THROWS_AS(pushforward(x3, table), std::invalid_argument);
}

TEST_CASE("pushforward is linear and satisfies the projection formula") {
    const long g = 3;
    auto ring = Ring::make({{"x", Locus::fiber, 1}, {"t", Locus::base, 1}}, 4);
    auto table = projective_pushforward_table(ring, g, "t", "cst", 2);

    GradedElement x = GradedElement::generator(ring, "x");
    GradedElement t = GradedElement::generator(ring, "t");

    for (long k = g - 1; k <= g; ++k) {
        GradedElement xk = pow(x, static_cast<int>(k));
        GradedElement lhs = pushforward(xk * t, table);
        GradedElement rhs = pushforward(xk, table) *
                            GradedElement::generator(table.target, "t");
        CHECK(lhs == rhs);
    }

    TestRng rng(9);
    for (int i = 0; i < 20; ++i) {
        Constant ca(rat(rng.range(-5, 5), rng.range(1, 4)));
        Constant cb(rat(rng.range(-5, 5), rng.range(1, 4)));
        GradedElement a = pow(x, 2);
        a.scale(ca);
        GradedElement b = pow(x, 3);
        b.scale(cb);
        GradedElement sum = pushforward(a + b, table);
        CHECK(sum == pushforward(a, table) + pushforward(b, table));
    }
}

TEST_CASE("todd and inverse todd substitute to mutual inverses") {
    for (int trunc = 1; trunc <= 6; ++trunc) {
        auto ring = Ring::make({{"x", Locus::fiber, 1}}, trunc);
        GradedElement x = GradedElement::generator(ring, "x");
        GradedElement td = genera::series_substitute(genera::todd_series(trunc), x);
        GradedElement ti = genera::series_substitute(genera::todd_inv_series(trunc), x);
        CHECK(td * ti == GradedElement::scalar(ring, Constant(1)));
    }
}

TEST_CASE("ring morphisms and substitution") {
    auto src = Ring::make({{"t", Locus::base, 1}, {"cst", Locus::base, 1}}, 1);
    auto dst = Ring::make({{"w", Locus::base, 1}}, 1);
    GradedElement t = GradedElement::generator(src, "t");
    GradedElement cst = GradedElement::generator(src, "cst");
    GradedElement el = t;
    el.scale(Constant(rat(-5, 6)));
    {
        GradedElement c = cst;
        c.scale(Constant(rat(-1, 3)));
        el += c;
    }
    GradedElement w = GradedElement::generator(dst, "w");
    std::map<std::string, GradedElement> images{
        {"t", -w}, {"cst", GradedElement::scalar(dst, Constant(1))}};
    GradedElement mapped = apply_hom(el, dst, images);
    CHECK(mapped.to_string() == "-1/3 + 5/6*w");

    std::map<std::string, GradedElement> missing{{"t", -w}};
    CHECK_THROWS_AS(apply_hom(el, dst, missing), std::invalid_argument);

    // in-ring substitution: degree-0 generator sent to zero
    auto gring = Ring::make({{"G", Locus::base, 0}, {"u", Locus::base, 1}}, 1);
    GradedElement gu = GradedElement::generator(gring, "G") * GradedElement::generator(gring, "u");
    GradedElement killed = substitute(gu, "G", GradedElement::zero(gring));
    CHECK(killed.is_zero());
    GradedElement kept = substitute(gu, "G", GradedElement::scalar(gring, Constant(1)));
    CHECK(kept == GradedElement::generator(gring, "u"));
}

TEST_CASE("ring construction guards") {
    CHECK_THROWS_AS(Ring::make({{"x", Locus::fiber, 1}, {"x", Locus::base, 1}}, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(Ring::make({{"x", Locus::fiber, 2}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Ring::make({}, -1), std::invalid_argument);
}
