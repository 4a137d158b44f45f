#include <catch2/catch_amalgamated.hpp>

#include "octiso/random.hpp"
#include "octiso/report.hpp"

using namespace octiso;

TEST_CASE("isotope unit and norm are the transported ones", "[isotope]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto A = zorn(c);
    auto a = parse_vector(c, "2,1/2,0,0,0,0,0,0", 8);
    auto b = parse_vector(c, "1,1,1,0,0,0,0,0", 8);
    auto I = isotope(A, a, b);
    auto ab = A.mul(a, b);
    CHECK(vec_eq(c, I.unit, A.inverse(ab)));
    CHECK(I.norm.equals(c, A.norm.scale(c, A.q(ab))));
    CHECK(c.eq(I.q(I.unit), c.one()));
    CHECK_NOTHROW(verify_composition_axioms(I));
    // x o y = (x a)(b y) on a spot sample
    auto x = A.basis(2), y = A.basis(6);
    CHECK(vec_eq(c, I.mul(x, y), A.mul(A.mul(x, a), A.mul(b, y))));
    // non-invertible parameters are refused
    CHECK_THROWS_AS(isotope(A, A.basis(2), b), precondition_error);
}

TEST_CASE("all seven formula maps verify on random parameters", "[isotope]") {
    auto run = [](const auto& c, const auto& A, unsigned long seed, int trials) {
        rng g(seed);
        for (int k = 0; k < trials; ++k) {
            auto a = rand_invertible(A, g), b = rand_invertible(A, g);
            auto ws = standard_isotopy_witnesses(A, a, b);
            CHECK(ws.size() == 7);
            for (const auto& w : ws) {
                INFO(w.name);
                CHECK(check_witness(A, w));
            }
        }
    };
    {
        auto R = ring::gf(5);
        fq_ctx c(R);
        run(c, zorn(c), 21, 5);
    }
    {
        auto R = ring::rationals();
        ring_ctx c(R);
        run(c, zorn(c), 22, 2);
    }
}

TEST_CASE("inverse pair square commutes", "[isotope]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(4);
    for (int k = 0; k < 5; ++k) {
        auto a = rand_sphere(A, g);
        auto ws = inverse_pair_square(A, a); // includes the B_a = R_a L_a identity
        CHECK(ws.size() == 3);
        for (const auto& w : ws) {
            INFO(w.name);
            CHECK(check_witness(A, w));
        }
    }
}

TEST_CASE("right twist lands in the inverse isotope with the original norm", "[isotope]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto A = zorn(c);
    rng g(9);
    auto u = rand_invertible(A, g);
    auto star = right_twist_product(A, u);
    CHECK(vec_eq(c, star.unit, A.unit));
    CHECK(star.norm.equals(c, A.norm));
    CHECK(is_algebra_isomorphism(star, isotope(A, A.inverse(u), A.unit), A.Rmat(u)));
}

TEST_CASE("intrinsic quadratic data recovers trace and norm", "[isotope]") {
    auto R = ring::gf(7);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(13);
    auto a = rand_invertible(A, g), b = rand_invertible(A, g);
    auto I = isotope(A, a, b);
    int recovered = 0;
    for (int k = 0; k < 20; ++k) {
        auto x = rand_element(I, g);
        auto qd = intrinsic_quadratic_data(I, x);
        if (!qd) continue;
        CHECK(qd->consistent);
        CHECK(c.eq(qd->n, I.q(x)));
        CHECK(c.eq(qd->t, I.trace(x)));
        ++recovered;
    }
    CHECK(recovered > 10);
    // scalar multiples of the unit span no 2x2 minor: no data
    CHECK_FALSE(intrinsic_quadratic_data(I, I.unit).has_value());
}

TEST_CASE("standard form reduces to a one-sided isotope", "[isotope]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(17);
    auto a = rand_invertible(A, g), b = rand_invertible(A, g);
    auto w = standard_form(A, a, b);
    CHECK(vec_eq(c, w.cod_a, A.unit));
    CHECK(vec_eq(c, w.cod_b, A.mul(A.inverse(a), b)));
    CHECK(check_witness(A, w));
}
