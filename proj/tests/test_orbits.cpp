#include <catch2/catch_amalgamated.hpp>

#include "octiso/orbits.hpp"

using namespace octiso;

TEST_CASE("sphere counts match the closed formula", "[orbits]") {
    const int qs[] = {2, 3};
    const long expected[] = {120, 2160};
    for (int i = 0; i < 2; ++i) {
        auto R = ring::gf(qs[i]);
        fq_ctx c(R);
        auto A = zorn(c);
        auto S = enumerate_sphere(A);
        CHECK(long(S.points.size()) == expected[i]);
        CHECK(split_sphere_count(c) == expected[i]);
        // index round trip
        for (std::size_t k = 0; k < S.points.size(); k += 37)
            CHECK(S.find(S.points[k]) == long(k));
        // the unit is on the sphere, zero is not
        CHECK(S.find(A.unit) >= 0);
        CHECK(S.find(vec<fq_ctx>(8, c.zero())) < 0);
    }
}

TEST_CASE("pair orbit reaches every unit pair at q=2", "[orbits]") {
    auto R = ring::gf(2);
    fq_ctx c(R);
    auto A = zorn(c);
    auto S = enumerate_sphere(A);
    auto gens = rotation_closed_generators(A, S);
    CHECK(gens.size() == 360); // three per sphere point
    auto O = orbit_of_unit_pair(A, S, gens);
    CHECK(O.size == 14400);
    // any start lands in the same orbit
    auto O2 = orbit_of_pair(A, S, rotation_closed_generators(A, S), S.points[11], S.points[97]);
    CHECK(O2.size == 14400);
    // identity generators keep the start fixed
    auto O3 = orbit_of_pair(A, S, {triple_identity(A)}, A.unit, A.unit);
    CHECK(O3.size == 1);
}

TEST_CASE("witness words replay to their pair", "[orbits]") {
    auto R = ring::gf(2);
    fq_ctx c(R);
    auto A = zorn(c);
    auto S = enumerate_sphere(A);
    auto O = orbit_of_unit_pair(A, S, rotation_closed_generators(A, S));
    // the unit pair itself: empty word, identity triple
    auto w0 = isotope_witness_via_orbit(A, O, A.unit, A.unit);
    CHECK(w0.word.empty());
    CHECK(triple_eq(c, w0.t, triple_identity(A)));
    // a few scattered pairs
    for (std::size_t k : {5u, 60u, 119u}) {
        auto a = S.points[k], b = S.points[(3 * k + 7) % S.points.size()];
        auto w = isotope_witness_via_orbit(A, O, a, b);
        auto T = triple_for_word(A, O.generators, w.word);
        CHECK(triple_eq(c, T, w.t));
        auto p = pi(A, T);
        CHECK(vec_eq(c, p.first, a));
        CHECK(vec_eq(c, p.second, b));
        CHECK(is_related(A, T));
        CHECK(is_algebra_isomorphism(A, isotope(A, a, b), T.t1));
    }
    // off-sphere requests are refused
    CHECK_THROWS_AS(isotope_witness_via_orbit(A, O, vec<fq_ctx>(8, c.zero()), A.unit),
                    precondition_error);
}

TEST_CASE("generator subsets can be grown deterministically", "[orbits]") {
    auto R = ring::gf(2);
    fq_ctx c(R);
    auto A = zorn(c);
    auto S = enumerate_sphere(A);
    auto few = rotation_closed_generators(A, S, 10);
    CHECK(few.size() == 30);
    auto O = orbit_of_unit_pair(A, S, few);
    CHECK(O.size <= 14400);
    CHECK(O.size >= 1);
}
