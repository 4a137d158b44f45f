#include <catch2/catch_amalgamated.hpp>

#include "octiso/clifford.hpp"
#include "octiso/random.hpp"

using namespace octiso;

TEST_CASE("the doubled representation satisfies the clifford relations", "[clifford]") {
    auto run = [](const auto& c, const auto& A) {
        using ctx_t = std::decay_t<decltype(c)>;
        clifford_rep<ctx_t> rep(A);
        auto I16 = mat<ctx_t>::identity(c, 16);
        for (int i = 0; i < 8; ++i) {
            auto ai = rep.alpha(A.basis(i));
            CHECK(mat_eq(c, mat_mul(c, ai, ai), mat_scale(c, A.q(A.basis(i)), I16)));
            CHECK(mat_eq(c, rep.sigma(ai), ai));
            for (int j = i + 1; j < 8; ++j) {
                auto aj = rep.alpha(A.basis(j));
                auto anti = mat_add(c, mat_mul(c, ai, aj), mat_mul(c, aj, ai));
                CHECK(mat_eq(c, anti,
                             mat_scale(c, A.b(A.basis(i), A.basis(j)), I16)));
            }
        }
    };
    {
        auto R = ring::gf(3);
        fq_ctx c(R);
        run(c, zorn(c));
    }
    {
        auto R = ring::rationals();
        ring_ctx c(R);
        run(c, zorn(c));
    }
}

TEST_CASE("spin generators round trip through triples", "[clifford]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    clifford_rep<fq_ctx> rep(A);
    rng g(41);
    for (int k = 0; k < 5; ++k) {
        auto x = rand_sphere(A, g), y = rand_sphere(A, g);
        auto u = spin_generator(rep, x, y);
        REQUIRE(is_spin(rep, u));
        auto t = triple_from_spin(rep, u);
        CHECK(is_related(A, t));
        CHECK(mat_eq(c, t.t3, mat_mul(c, A.Lmat(A.conj(x)), A.Lmat(y))));
        CHECK(mat_eq(c, spin_from_triple(rep, t), u));
    }
    // the converse: lift a triple, then read it back
    auto bt = basic_triple(A, rand_sphere(A, g));
    auto ub = spin_from_triple(rep, bt);
    CHECK(is_spin(rep, ub));
    CHECK(triple_eq(c, triple_from_spin(rep, ub), bt));
}

TEST_CASE("extracted map is multiplicative", "[clifford]") {
    auto R = ring::gf(3);
    fq_ctx c(R);
    auto A = zorn(c);
    clifford_rep<fq_ctx> rep(A);
    rng g(43);
    auto u = spin_from_triple(rep, basic_triple(A, rand_sphere(A, g)));
    auto v = spin_generator(rep, rand_sphere(A, g), rand_sphere(A, g));
    auto lhs = triple_from_spin(rep, mat_mul(c, u, v));
    auto rhs = triple_mul(c, triple_from_spin(rep, u), triple_from_spin(rep, v));
    CHECK(triple_eq(c, lhs, rhs));
}

TEST_CASE("kernel elements map to the eta kernel triples", "[clifford]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto A = zorn(c);
    clifford_rep<ring_ctx> rep(A);
    auto I16 = mat<ring_ctx>::identity(c, 16);
    auto I8 = mat<ring_ctx>::identity(c, 8);
    for (auto eta : {c.one(), c.neg(c.one())}) {
        auto t = triple_from_spin(rep, mat_scale(c, eta, I16));
        CHECK(is_identity(c, t.t1));
        CHECK(mat_eq(c, t.t2, mat_scale(c, eta, I8)));
        CHECK(mat_eq(c, t.t3, mat_scale(c, eta, I8)));
    }
}

TEST_CASE("spin membership rejects an odd reflection", "[clifford]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    clifford_rep<fq_ctx> rep(A);
    rng g(47);
    // alpha(x) of a unit-norm x is odd: it must fail the even test
    CHECK_FALSE(is_spin(rep, rep.alpha(rand_sphere(A, g))));
    // and a random even non-isometry fails too
    auto u = mat<fq_ctx>::identity(c, 16);
    u.at(0, 0) = 3;
    CHECK_FALSE(is_spin(rep, u));
}
