#include <catch2/catch_amalgamated.hpp>

#include "octiso/random.hpp"
#include "octiso/triality.hpp"

using namespace octiso;

TEST_CASE("basic triples are related and project to the conjugate pair", "[triality]") {
    auto run = [](const auto& c, const auto& A, unsigned long seed) {
        rng g(seed);
        auto x = rand_sphere(A, g);
        auto t = basic_triple(A, x);
        CHECK(is_related(A, t));
        auto p = pi(A, t);
        CHECK(vec_eq(c, p.first, A.conj(x)));
        CHECK(vec_eq(c, p.second, A.conj(x)));
        CHECK(is_related(A, rotate(t)));
        CHECK(is_related(A, triple_inv(c, t)));
    };
    {
        auto R = ring::gf(3);
        fq_ctx c(R);
        run(c, zorn(c), 1);
    }
    {
        auto R = ring::integers();
        ring_ctx c(R);
        run(c, zorn(c), 2);
    }
}

TEST_CASE("products of related triples stay related and compose pi by sigma", "[triality]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(7);
    auto s = basic_triple(A, rand_sphere(A, g));
    auto t = basic_triple(A, rand_sphere(A, g));
    auto st = triple_mul(c, s, t);
    CHECK(is_related(A, st));
    auto p = pi(A, st);
    auto pr = pi(A, rotate(st));
    CHECK(vec_eq(c, pr.first, A.mul(A.conj(p.second), A.conj(p.first))));
    CHECK(vec_eq(c, pr.second, p.first));
    // action on pairs matches pi of the product
    auto moved = act_on_pair(A, st, {A.unit, A.unit});
    CHECK(vec_eq(c, moved.first, p.first));
    CHECK(vec_eq(c, moved.second, p.second));
}

TEST_CASE("kernel triples and scaled impostors", "[triality]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    for (auto eta : {c.one(), c.neg(c.one())}) CHECK(is_related(A, kernel_triple(A, eta)));
    auto I8 = mat<fq_ctx>::identity(c, 8);
    triple<fq_ctx> bad{I8, I8, mat_neg(c, I8)};
    CHECK_FALSE(is_related(A, bad));
    CHECK_FALSE(delta_invariant(A, bad));
    CHECK(delta_invariant(A, kernel_triple(A, c.neg(c.one()))));
    CHECK_THROWS_AS(kernel_triple(A, c.element(2)), precondition_error);
}

TEST_CASE("triple rebuilt from its first component", "[triality]") {
    auto R = ring::gf(3);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(19);
    auto t = triple_mul(c, basic_triple(A, rand_sphere(A, g)),
                        rotate(basic_triple(A, rand_sphere(A, g))));
    auto [a, b] = pi(A, t);
    auto rt = triple_from_iso(A, t.t1, a, b);
    CHECK(triple_eq(c, rt, t));
    CHECK(c.eq(eta_of(A, t, a, b), c.one()));
    // the tail-negated triple is the other lift of the same pair
    triple<fq_ctx> tn{t.t1, mat_neg(c, t.t2), mat_neg(c, t.t3)};
    CHECK(is_related(A, tn));
    CHECK(c.eq(eta_of(A, tn, a, b), c.neg(c.one())));
    // a foreign designated pair is rejected
    CHECK_THROWS_AS(eta_of(A, t, A.unit, A.unit), precondition_error);
}

TEST_CASE("autotopy picture of a related triple", "[triality]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(23);
    auto t = basic_triple(A, rand_sphere(A, g));
    CHECK(is_autotopy(A, autotopy_components(A, t)));
}

TEST_CASE("twisted conjugation transports isotope triples", "[triality]") {
    auto R = ring::gf(5);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(29);
    auto a = rand_sphere(A, g), b = rand_sphere(A, g);
    CHECK(is_related(A, twist_reference_triple(A, a, b)));
    auto I = isotope(A, a, b);
    auto s = basic_triple(I, rand_sphere(I, g));
    auto t = basic_triple(I, rand_sphere(I, g));
    auto Ts = twist_conjugate(A, a, b, s);
    CHECK(is_related(A, Ts));
    auto Tst = twist_conjugate(A, a, b, triple_mul(c, s, t));
    CHECK(triple_eq(c, Tst, triple_mul(c, Ts, twist_conjugate(A, a, b, t))));
}

TEST_CASE("delta form is the triality invariant", "[triality]") {
    auto R = ring::gf(3);
    fq_ctx c(R);
    auto A = zorn(c);
    rng g(31);
    auto t = basic_triple(A, rand_sphere(A, g));
    CHECK(delta_invariant(A, t));
    // spot value: delta(1, x, y) = b(1, conj(x) conj(y))
    auto x = rand_element(A, g), y = rand_element(A, g);
    CHECK(c.eq(delta_form(A, A.unit, x, y), A.b(A.unit, A.mul(A.conj(x), A.conj(y)))));
}
