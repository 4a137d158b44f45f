#include <catch2/catch_amalgamated.hpp>

#include "octiso/report.hpp" // parse_elem sits with the serialization helpers

using namespace octiso;

TEST_CASE("ring spec grammar round trips", "[ring]") {
    for (const char* s : {"Z", "Q", "Z/8", "F9=x^2+1", "Q[t]", "Q[t,1/t]"}) {
        auto R = ring::parse(s);
        REQUIRE(R != nullptr);
        CHECK(ring::parse(R->spec())->spec() == R->spec());
    }
    CHECK(ring::parse("Z")->kind == ring_kind::integers);
    CHECK(ring::parse("Q")->kind == ring_kind::rationals);
    CHECK(ring::parse("Z/8")->kind == ring_kind::mod_n);
    CHECK(ring::parse("F9=x^2+1")->kind == ring_kind::finite_field);
    CHECK(ring::parse("F9=x^2+1")->size() == 9);
    CHECK(ring::parse("Q[t]")->kind == ring_kind::poly);
    CHECK(ring::parse("Q[t,1/t]")->kind == ring_kind::laurent);
    CHECK_THROWS_AS(ring::parse("W"), parse_error);
    CHECK_THROWS_AS(ring::parse("Q[t,1/s]"), parse_error);
}

TEST_CASE("Z/8 units and non-units", "[ring]") {
    auto R = ring::mod(8);
    ring_ctx c(R);
    auto three = R->from_long(3);
    CHECK(c.is_unit(three));
    CHECK(c.eq(c.inv(three), three)); // 3*3 = 9 = 1 mod 8
    auto two = R->from_long(2);
    CHECK_FALSE(c.is_unit(two));
    CHECK_THROWS_AS(c.inv(two), not_invertible);
}

TEST_CASE("rationals canonicalize on parse", "[ring]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto x = R->parse_scalar("2/4");
    CHECK(c.str(x) == "1/2");
    CHECK(c.eq(x, R->parse_scalar("1/2")));
    CHECK(c.eq(c.mul(x, R->from_long(2)), c.one()));
}

TEST_CASE("F9 arithmetic through the table context", "[ring]") {
    auto R = ring::parse("F9=x^2+1");
    fq_ctx c(R);
    auto x = parse_elem(c, "x");
    // x^2 = -1 = 2 in the prime field
    CHECK(c.str(c.mul(x, x)) == "2");
    // the multiplicative group has order 8
    auto p = c.one();
    for (int i = 0; i < 8; ++i) p = c.mul(p, x);
    CHECK(c.eq(p, c.one()));
    CHECK(c.eq(c.mul(x, c.inv(x)), c.one()));
}

TEST_CASE("laurent units invert exactly", "[ring]") {
    auto R = ring::parse("Q[t,1/t]");
    ring_ctx c(R);
    auto x = R->parse_scalar("3t^2");
    CHECK(c.is_unit(x));
    CHECK(c.str(c.inv(x)) == "1/3*t^-2");
    CHECK(c.eq(c.mul(x, c.inv(x)), c.one()));
    auto y = R->parse_scalar("t^-1+2");
    CHECK(c.str(y) == "2+t^-1");
    CHECK_FALSE(c.is_unit(y)); // two terms: not a unit in the Laurent ring
    // polynomial ring: t is not invertible
    auto P = ring::parse("Q[t]");
    ring_ctx cp(P);
    CHECK_FALSE(cp.is_unit(P->parse_scalar("t")));
}

TEST_CASE("parse_elem respects each scalar grammar", "[ring]") {
    auto Z = ring::integers();
    ring_ctx cz(Z);
    CHECK(cz.str(parse_elem(cz, "-7")) == "-7");
    auto F2 = ring::gf(2);
    fq_ctx c2(F2);
    CHECK(c2.str(parse_elem(c2, "-1")) == "1");
    CHECK_THROWS_AS(parse_elem(cz, ""), parse_error);
}
