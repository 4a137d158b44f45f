#include <catch2/catch_amalgamated.hpp>

#include "octiso/linalg.hpp"

using namespace octiso;

namespace {
mat<ring_ctx> from_longs(const ring_ctx& c, int n, int m, std::initializer_list<long> vals) {
    mat<ring_ctx> M(c, n, m);
    auto it = vals.begin();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) M.at(i, j) = c.R->from_long(*it++);
    return M;
}
} // namespace

TEST_CASE("solve_linear finds particular solutions and kernels", "[linalg]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto A = from_longs(c, 2, 2, {1, 1, 2, 2});
    auto sol = solve_linear(c, A, vec<ring_ctx>{R->from_long(1), R->from_long(2)});
    REQUIRE(sol.solvable);
    CHECK(sol.kernel.size() == 1);
    CHECK(c.eq(c.add(sol.particular[0], sol.particular[1]), c.one()));
    // inconsistent right side
    auto bad = solve_linear(c, A, vec<ring_ctx>{R->from_long(1), R->from_long(3)});
    CHECK_FALSE(bad.solvable);
}

TEST_CASE("matrix inverse demands unit determinant over Z", "[linalg]") {
    auto R = ring::integers();
    ring_ctx c(R);
    auto M = from_longs(c, 2, 2, {2, 0, 0, 1});
    try {
        mat_inverse(c, M);
        FAIL("expected not_invertible");
    } catch (const not_invertible& e) {
        CHECK(e.element == "2");
    }
    auto U = from_longs(c, 2, 2, {1, 3, 0, -1}); // det -1, invertible over Z
    auto Ui = mat_inverse(c, U);
    CHECK(is_identity(c, mat_mul(c, U, Ui)));
}

TEST_CASE("determinant and characteristic polynomial", "[linalg]") {
    auto R = ring::rationals();
    ring_ctx c(R);
    auto M = from_longs(c, 2, 2, {2, 0, 0, 3});
    CHECK(c.str(det(c, M)) == "6");
    auto p = charpoly(c, M); // monic, highest degree first
    REQUIRE(p.size() == 3);
    CHECK(c.str(p[0]) == "1");
    CHECK(c.str(p[1]) == "-5");
    CHECK(c.str(p[2]) == "6");
}

TEST_CASE("rank over a finite field", "[linalg]") {
    auto R = ring::gf(2);
    fq_ctx c(R);
    mat<fq_ctx> M(c, 3, 3);
    // rows: 110 / 011 / 101 = row1 + row2 over F2
    M.at(0, 0) = 1; M.at(0, 1) = 1;
    M.at(1, 1) = 1; M.at(1, 2) = 1;
    M.at(2, 0) = 1; M.at(2, 2) = 1;
    CHECK(rank(c, M) == 2);
}

TEST_CASE("matrix algebra plumbing", "[linalg]") {
    auto R = ring::integers();
    ring_ctx c(R);
    auto A = from_longs(c, 2, 3, {1, 2, 3, 4, 5, 6});
    auto At = transpose(c, A);
    CHECK(At.n == 3);
    CHECK(c.str(At.at(2, 1)) == "6");
    auto AtA = mat_mul(c, At, A);
    CHECK(c.str(AtA.at(0, 0)) == "17");
    CHECK(mat_eq(c, AtA, transpose(c, AtA)));
    auto cols = mat_from_columns(c, {column(A, 0), column(A, 2)});
    CHECK(c.str(cols.at(1, 1)) == "6");
}
