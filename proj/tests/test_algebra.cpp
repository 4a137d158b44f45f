#include <catch2/catch_amalgamated.hpp>

#include "octiso/isotope.hpp"
#include "octiso/random.hpp"

using namespace octiso;

// basis order: diagonal idempotents e0, e1, then the two off-diagonal
// three-vector slots u1 u2 u3 (e2..e4) and w1 w2 w3 (e5..e7)

TEST_CASE("vector matrix products match the hand calculation", "[algebra]") {
    auto R = ring::gf(7);
    fq_ctx c(R);
    auto A = zorn(c);
    auto e = [&](int i) { return A.basis(i); };
    CHECK(vec_eq(c, A.mul(e(2), e(5)), e(0)));               // u1 w1 = e0
    CHECK(vec_eq(c, A.mul(e(5), e(2)), e(1)));               // w1 u1 = e1
    CHECK(vec_eq(c, A.mul(e(2), e(3)), e(7)));               // u1 u2 = w3
    CHECK(vec_eq(c, A.mul(e(3), e(2)), vec_scale(c, c.neg(c.one()), e(7))));
    CHECK(vec_is_zero(c, A.mul(e(2), e(2))));                // u1^2 = 0
    CHECK(vec_eq(c, A.mul(e(0), e(2)), e(2)));               // e0 u1 = u1
    CHECK(vec_is_zero(c, A.mul(e(2), e(0))));                // u1 e0 = 0
    CHECK(vec_eq(c, A.mul(A.unit, e(6)), e(6)));
}

TEST_CASE("split norm has the hyperbolic coefficient pattern", "[algebra]") {
    auto R = ring::integers();
    ring_ctx c(R);
    auto A = zorn(c);
    CHECK(A.norm.n == 8);
    CHECK(c.str(A.norm.coeff(0, 1)) == "1");
    for (int i : {2, 3, 4}) CHECK(c.str(A.norm.coeff(i, i + 3)) == "-1");
    for (int i = 0; i < 8; ++i) CHECK(c.is_zero(A.norm.coeff(i, i)));
    CHECK(A.norm.is_regular(c));
    // conjugation swaps the idempotents and negates the off-diagonal slots
    CHECK(vec_eq(c, A.conj(A.basis(0)), A.basis(1)));
    CHECK(vec_eq(c, A.conj(A.basis(2)), vec_scale(c, c.neg(c.one()), A.basis(2))));
    CHECK(c.str(A.trace(A.basis(0))) == "1");
}

TEST_CASE("doubling with three negative parameters gives the compact form", "[algebra]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto m1 = c.neg(c.one());
    auto A = cayley_dickson(c, {m1, m1, m1});
    for (int i = 1; i < 8; ++i) {
        CHECK(vec_eq(c, A.mul(A.basis(i), A.basis(i)),
                     vec_scale(c, c.neg(c.one()), A.unit)));
        CHECK(c.str(A.norm.coeff(i, i)) == "1");
    }
    CHECK(vec_eq(c, A.mul(A.basis(1), A.basis(2)), A.basis(3)));
    CHECK(vec_eq(c, A.mul(A.basis(2), A.basis(1)),
                 vec_scale(c, c.neg(c.one()), A.basis(3))));
    // anti-associative corner: (e1 e2) e4 = -e1 (e2 e4)
    auto lhs = A.mul(A.mul(A.basis(1), A.basis(2)), A.basis(4));
    auto rhs = A.mul(A.basis(1), A.mul(A.basis(2), A.basis(4)));
    CHECK(vec_eq(c, lhs, vec_scale(c, c.neg(c.one()), rhs)));
}

TEST_CASE("identity suite is clean on seeded samples", "[algebra]") {
    auto run = [](const auto& c, const auto& A) {
        using ctx_t = std::decay_t<decltype(c)>;
        rng g(11);
        std::vector<std::array<vec<ctx_t>, 3>> samples;
        for (int i = 0; i < 30; ++i)
            samples.push_back({rand_element(A, g), rand_element(A, g), rand_element(A, g)});
        auto rep = identity_suite(A, samples);
        CHECK(rep.lines.size() == 9);
        CHECK(rep.pass());
    };
    {
        auto R = ring::gf(3);
        fq_ctx c(R);
        run(c, zorn(c));
    }
    {
        auto R = ring::rationals();
        ring_ctx c(R);
        auto m1 = c.neg(c.one());
        run(c, cayley_dickson(c, {m1, m1, m1}));
    }
    {
        auto R = ring::parse("Q[t,1/t]");
        ring_ctx c(R);
        run(c, zorn(c));
    }
}

TEST_CASE("isomorphism decision rejects a unit-preserving basis swap", "[algebra]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    CHECK(is_algebra_isomorphism(A, A, mat<fq_ctx>::identity(c, 8)));
    // swapping u1 and u2 fixes the unit but flips u1 u2 = w3 to -w3
    auto P = mat<fq_ctx>::identity(c, 8);
    std::swap(P.at(2, 2), P.at(2, 3));
    std::swap(P.at(3, 3), P.at(3, 2));
    CHECK_FALSE(is_algebra_isomorphism(A, A, P));
}

TEST_CASE("nucleus and trace sections", "[algebra]") {
    {
        auto R = ring::gf(3);
        fq_ctx c(R);
        CHECK(associative_nucleus_dim(zorn(c)) == 1);
    }
    {
        auto R = ring::integers();
        ring_ctx c(R);
        auto A = zorn(c);
        auto s = trace_section(A);
        CHECK(c.eq(A.trace(s), c.one()));
    }
    {
        auto R = ring::mod(8);
        ring_ctx c(R);
        auto A = zorn(c);
        auto s = trace_section(A);
        CHECK(c.eq(A.trace(s), c.one()));
    }
}

TEST_CASE("unit complement basis spans and stays unimodular", "[algebra]") {
    auto run = [](const auto& c, const auto& A) {
        auto cb = unit_complement_basis(A);
        REQUIRE(cb.basis.size() == 7);
        CHECK(cb.nonsingular);
        for (const auto& v : cb.basis) CHECK(c.is_zero(A.trace(v)));
    };
    {
        auto R = ring::gf(2);
        fq_ctx c(R);
        run(c, zorn(c));
    }
    {
        auto R = ring::rationals();
        ring_ctx c(R);
        run(c, zorn(c));
    }
}
