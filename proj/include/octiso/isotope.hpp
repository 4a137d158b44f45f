/** @file isotope.hpp
 *  Unital isotopes C^{a,b}: x o y = (x a)(b y) for invertible a, b.
 *
 *  The materialized isotope is a full algebra value: unit (ab)^{-1}, norm
 *  q(ab) q, and conjugation derived from its own trace form. Axioms are not
 *  re-verified on each materialization (they are theorems, covered by the
 *  test suite); call verify_composition_axioms when you want the receipt.
 */
#pragma once

#include <optional>

#include "octiso/algebra.hpp"

namespace octiso {

template <scalar_context C>
void verify_composition_axioms(const algebra<C>& A) {
    detail::verify_octonion_axioms(A);
}

template <scalar_context C>
algebra<C> isotope(const algebra<C>& A, const vec<C>& a, const vec<C>& b) {
    const C& c = A.ctx;
    require(A.is_invertible(a) && A.is_invertible(b), "isotope parameters must be invertible");
    algebra<C> I;
    I.ctx = c;
    I.n = A.n;
    I.tab.assign(std::size_t(A.n) * A.n, {});
    I.name = "isotope";
    for (int i = 0; i < A.n; ++i) {
        auto ea = A.mul(A.basis(i), a);
        for (int j = 0; j < A.n; ++j)
            I.set_entry(i, j, A.mul(ea, A.mul(b, A.basis(j))));
    }
    auto ab = A.mul(a, b);
    I.unit = A.inverse(ab);
    I.norm = A.norm.scale(c, A.q(ab));
    return I;
}

/// Intrinsic trace and norm of x, read off the multiplication alone:
/// x o x = t x - n 1. Returns nothing when no coordinate pair pins (t, n)
/// down (then x sits too close to the span of the unit for this probe).
template <scalar_context C>
struct quadratic_data {
    typename C::elem t, n;
    bool consistent; // the full vector equation held, not just the pinning pair
};

template <scalar_context C>
std::optional<quadratic_data<C>> intrinsic_quadratic_data(const algebra<C>& A, const vec<C>& x) {
    const C& c = A.ctx;
    auto xx = A.mul(x, x);
    auto solve_at = [&](int i, int j) -> std::optional<quadratic_data<C>> {
        // [ x_i  -1_i ] [t]   [xx_i]
        // [ x_j  -1_j ] [n] = [xx_j]
        auto det = c.sub(c.mul(x[std::size_t(j)], A.unit[std::size_t(i)]),
                         c.mul(x[std::size_t(i)], A.unit[std::size_t(j)]));
        if (!c.is_unit(det)) return std::nullopt;
        auto d = c.inv(det);
        auto t = c.mul(d, c.sub(c.mul(xx[std::size_t(j)], A.unit[std::size_t(i)]),
                                c.mul(xx[std::size_t(i)], A.unit[std::size_t(j)])));
        auto n = c.mul(d, c.sub(c.mul(xx[std::size_t(j)], x[std::size_t(i)]),
                                c.mul(xx[std::size_t(i)], x[std::size_t(j)])));
        return quadratic_data<C>{t, n, false};
    };
    for (int i = 0; i < A.n; ++i)
        for (int j = i + 1; j < A.n; ++j)
            if (auto r = solve_at(i, j)) {
                auto rhs = vec_sub(c, vec_scale(c, r->t, x), vec_scale(c, r->n, A.unit));
                r->consistent = vec_eq(c, xx, rhs);
                return r;
            }
    return std::nullopt;
}

// ---- the standard isotopy witnesses ----

template <scalar_context C>
struct isotopy_witness {
    std::string name;
    mat<C> map;
    vec<C> dom_a, dom_b; // the map is an isomorphism C^{dom} -> C^{cod}
    vec<C> cod_a, cod_b;
};

template <scalar_context C>
bool check_witness(const algebra<C>& A, const isotopy_witness<C>& w) {
    return is_algebra_isomorphism(isotope(A, w.dom_a, w.dom_b), isotope(A, w.cod_a, w.cod_b), w.map);
}

/// The seven isomorphisms relating C^{a,b} to its one-parameter normal forms.
/// Valid for any invertible a, b (unit norms are not required).
template <scalar_context C>
std::vector<isotopy_witness<C>> standard_isotopy_witnesses(const algebra<C>& A, const vec<C>& a,
                                                           const vec<C>& b) {
    const C& c = A.ctx;
    auto ai = A.inverse(a), bi = A.inverse(b);
    auto aba = A.mul(a, A.mul(b, a));
    auto bab = A.mul(b, A.mul(a, b));
    auto one = A.unit;
    std::vector<isotopy_witness<C>> out;
    out.push_back({"L_a", A.Lmat(a), one, aba, a, b});
    out.push_back({"R_b", A.Rmat(b), bab, one, a, b});
    out.push_back({"R_{b^-1} L_a", mat_mul(c, A.Rmat(bi), A.Lmat(a)), one, aba, bab, one});
    out.push_back({"B_a", A.Bmat(a), a, b, one, A.mul(b, ai)});
    out.push_back({"B_b", A.Bmat(b), a, b, A.mul(bi, a), one});
    out.push_back({"B_{ba^-1} B_a", mat_mul(c, A.Bmat(A.mul(b, ai)), A.Bmat(a)), a, b,
                   A.mul(a, bi), one});
    out.push_back({"B_{b^-1 a} B_b", mat_mul(c, A.Bmat(A.mul(bi, a)), A.Bmat(b)), a, b, one,
                   A.mul(ai, b)});
    return out;
}

/// The b = a^{-1} square: L_a and R_a tie the three normal forms of C^{a,a^{-1}}
/// together and B_a = R_a L_a closes it.
template <scalar_context C>
std::vector<isotopy_witness<C>> inverse_pair_square(const algebra<C>& A, const vec<C>& a) {
    const C& c = A.ctx;
    auto ai = A.inverse(a);
    auto one = A.unit;
    std::vector<isotopy_witness<C>> out;
    out.push_back({"L_a", A.Lmat(a), one, a, a, ai});
    out.push_back({"R_a", A.Rmat(a), a, ai, ai, one});
    out.push_back({"B_a", A.Bmat(a), one, a, ai, one});
    require(mat_eq(c, A.Bmat(a), mat_mul(c, A.Rmat(a), A.Lmat(a))), "B_a != R_a L_a");
    return out;
}

/// Right-multiplication twist x * y = (x (y u)) u^{-1}; same unit, same norm.
/// R_u is an isomorphism onto C^{u^{-1}, 1}.
template <scalar_context C>
algebra<C> right_twist_product(const algebra<C>& A, const vec<C>& u) {
    const C& c = A.ctx;
    auto ui = A.inverse(u);
    algebra<C> S;
    S.ctx = c;
    S.n = A.n;
    S.tab.assign(std::size_t(A.n) * A.n, {});
    S.name = "right_twist";
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            S.set_entry(i, j, A.mul(A.mul(A.basis(i), A.mul(A.basis(j), u)), ui));
    S.unit = A.unit;
    S.norm = A.norm;
    return S;
}

/// Every C^{a,b} is isomorphic to the one-parameter form C^{1,c} with c = a^{-1} b.
template <scalar_context C>
isotopy_witness<C> standard_form(const algebra<C>& A, const vec<C>& a, const vec<C>& b) {
    const C& c = A.ctx;
    auto bi = A.inverse(b);
    return {"B_{b^-1 a} B_b", mat_mul(c, A.Bmat(A.mul(bi, a)), A.Bmat(b)), a, b, A.unit,
            A.mul(A.inverse(a), b)};
}

} // namespace octiso
