#include <catch2/catch_amalgamated.hpp>

#include "octiso/random.hpp"
#include "octiso/trivialize.hpp"

using namespace octiso;

TEST_CASE("cubing maps and the conjugation identity", "[trivialize]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(3);
    for (int k = 0; k < 5; ++k) {
        auto x = rand_invertible(A, g);
        CHECK(conjugation_identity_holds(A, x, rand_element(A, g), rand_element(A, g)));
        // tau- after tau+ conjugates by c (Artin: the subalgebra on {c, y} associates)
        auto s = rand_sphere(A, g);
        auto y = rand_element(A, g);
        CHECK(vec_eq(c, tau_minus(A, s, tau_plus(A, s, y)), A.mul(A.mul(A.inverse(s), y), s)));
    }
}

TEST_CASE("tau triples are related exactly when the norm cubes to one", "[trivialize]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(5);
    auto s = rand_sphere(A, g);
    CHECK(is_related(A, tau_triple(A, s)));
    // over F4 the norm-cube condition admits elements with q(c) != 1
    auto R4 = ring::gf_order(4);
    fq_ctx c4(R4);
    auto A4 = zorn(c4);
    rng g4(7);
    for (int k = 0; k < 40; ++k) {
        auto x = rand_invertible(A4, g4);
        auto qx = A4.q(x);
        if (c4.eq(qx, c4.one())) continue;
        // every nonzero scalar of F4 has cube one
        CHECK(c4.eq(c4.mul(qx, c4.mul(qx, qx)), c4.one()));
        CHECK(is_related(A4, tau_triple(A4, x)));
        break;
    }
}

TEST_CASE("both general chain shapes produce verified witnesses", "[trivialize]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(11);
    // item (2) shape: tau+ chains need only unit norms along the chain
    for (int k = 0; k < 3; ++k) {
        auto w = chain_iso_item2(A, {rand_sphere(A, g), rand_sphere(A, g), rand_sphere(A, g)});
        CHECK(c.eq(A.q(w.a), c.one()));
        CHECK(check_trivialization(A, w));
    }
    // item (1) shape: traceless pairs satisfy the product compatibility
    auto t1 = rand_sphere_traceless(A, g), t2 = rand_sphere_traceless(A, g);
    auto w1 = chain_iso_item1(A, {t1, t2});
    CHECK(w1.method == "lchain");
    CHECK(check_trivialization(A, w1));
    // a generic chain violates the compatibility and is refused
    bool threw = false;
    for (int k = 0; k < 40 && !threw; ++k) {
        auto x = rand_sphere(A, g), y = rand_sphere(A, g);
        try {
            (void)chain_iso_item1(A, {x, y});
        } catch (const precondition_error&) {
            threw = true;
        }
    }
    CHECK(threw);
}

TEST_CASE("the named constructions land on their targets", "[trivialize]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto A = zorn(c);
    rng g(13);
    {
        auto s = rand_sphere(A, g);
        auto w = cube_trivialization(A, s);
        CHECK(w.method == "cube");
        CHECK(vec_eq(c, w.a, A.mul(s, A.mul(s, s))));
        CHECK(check_trivialization(A, w));
    }
    {
        auto s = rand_sphere_traceless(A, g);
        auto w = traceless_trivialization(A, s);
        CHECK(w.method == "traceless");
        CHECK(vec_eq(c, w.a, s));
        CHECK(check_trivialization(A, w));
    }
    {
        auto s1 = rand_sphere_traceless(A, g), s2 = rand_sphere_traceless(A, g);
        auto w = bchain_trivialization(A, s1, s2);
        CHECK(w.method == "bchain");
        CHECK(vec_eq(c, w.a, A.mul(s2, s1)));
        CHECK(check_trivialization(A, w));
    }
}

TEST_CASE("orthogonal complement construction", "[trivialize]") {
    auto R = ring::gf(7);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(17);
    for (int tries = 0; tries < 200; ++tries) {
        auto a = rand_sphere(A, g);
        auto u = rand_element(A, g);
        if (!c.is_zero(A.b(u, A.unit)) || !c.is_zero(A.b(u, a))) continue;
        if (!c.is_unit(A.q(u))) continue;
        if (!vec_eq(c, A.mul(u, A.conj(a)), A.mul(a, u))) continue;
        auto w = orthogonal_trivialization(A, a, u);
        CHECK(w.method == "orthogonal");
        CHECK(vec_eq(c, w.a, a));
        CHECK(check_trivialization(A, w));
        return;
    }
    FAIL("no orthogonal test vector found");
}

TEST_CASE("field trivialization covers sampled spheres", "[trivialize]") {
    {
        auto R = ring::gf(5);
        fq_ctx c(R);
        auto A = zorn(c);
        rng g(19);
        for (int k = 0; k < 50; ++k) {
            auto a = rand_sphere(A, g);
            auto w = field_trivialize(A, a);
            CHECK(vec_eq(c, w.a, a));
            CHECK(check_trivialization(A, w));
        }
    }
    {
        auto R = ring::rationals();
        ring_ctx c(R);
        auto A = zorn(c);
        rng g(23);
        for (int k = 0; k < 10; ++k) {
            auto a = rand_sphere(A, g);
            auto w = field_trivialize(A, a);
            CHECK(check_trivialization(A, w));
        }
        // the scalar target routes through the cube shortcut
        auto w1 = field_trivialize(A, A.unit);
        CHECK(w1.method == "cube");
        CHECK(check_trivialization(A, w1));
    }
}
