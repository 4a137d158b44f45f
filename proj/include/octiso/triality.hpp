/** @file triality.hpp
 *  Related triples: (t1, t2, t3) of isometries with
 *      t1(x y) = conj(t2(conj x)) conj(t3(conj y)).
 *
 *  Equivalently (t1, k t2 k, k t3 k) is an autotopy, k = conjugation. The
 *  component maps t2, t3 act on the sphere pair (a, b) = pi(t) = (t3(1), t2(1)),
 *  and t1 is an algebra isomorphism C -> C^{a,b} (after fixing the sign eta).
 */
#pragma once

#include "octiso/isotope.hpp"

namespace octiso {

template <scalar_context C>
struct triple {
    mat<C> t1, t2, t3;
};

template <scalar_context C>
bool triple_eq(const C& c, const triple<C>& s, const triple<C>& t) {
    return mat_eq(c, s.t1, t.t1) && mat_eq(c, s.t2, t.t2) && mat_eq(c, s.t3, t.t3);
}

/// (B_c, R_cbar, L_cbar) for q(c) = 1.
template <scalar_context C>
triple<C> basic_triple(const algebra<C>& A, const vec<C>& c) {
    require(A.ctx.eq(A.q(c), A.ctx.one()), "basic triple needs a norm-one element");
    auto cb = A.conj(c);
    return {A.Bmat(c), A.Rmat(cb), A.Lmat(cb)};
}

template <scalar_context C>
triple<C> rotate(const triple<C>& t) {
    return {t.t2, t.t3, t.t1};
}

template <scalar_context C>
triple<C> triple_mul(const C& c, const triple<C>& s, const triple<C>& t) {
    return {mat_mul(c, s.t1, t.t1), mat_mul(c, s.t2, t.t2), mat_mul(c, s.t3, t.t3)};
}

template <scalar_context C>
triple<C> triple_inv(const C& c, const triple<C>& t) {
    return {mat_inverse(c, t.t1), mat_inverse(c, t.t2), mat_inverse(c, t.t3)};
}

template <scalar_context C>
triple<C> triple_identity(const algebra<C>& A) {
    auto I = mat<C>::identity(A.ctx, A.n);
    return {I, I, I};
}

/// The kernel elements (I, eta I, eta I), eta^2 = 1.
template <scalar_context C>
triple<C> kernel_triple(const algebra<C>& A, const typename C::elem& eta) {
    const C& c = A.ctx;
    require(c.eq(c.mul(eta, eta), c.one()), "kernel parameter must square to 1");
    auto I = mat<C>::identity(c, A.n);
    return {I, mat_scale(c, eta, I), mat_scale(c, eta, I)};
}

template <scalar_context C>
bool is_related(const algebra<C>& A, const triple<C>& t) {
    const C& c = A.ctx;
    if (!is_isometry(c, A.norm, t.t1) || !is_isometry(c, A.norm, t.t2) ||
        !is_isometry(c, A.norm, t.t3))
        return false;
    std::vector<vec<C>> u, v;
    u.reserve(std::size_t(A.n));
    v.reserve(std::size_t(A.n));
    for (int i = 0; i < A.n; ++i) {
        auto ci = A.conj(A.basis(i));
        u.push_back(A.conj(mat_vec(c, t.t2, ci)));
        v.push_back(A.conj(mat_vec(c, t.t3, ci)));
    }
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            auto lhs = mat_vec(c, t.t1, A.mul(A.basis(i), A.basis(j)));
            if (!vec_eq(c, lhs, A.mul(u[std::size_t(i)], v[std::size_t(j)]))) return false;
        }
    return true;
}

/// pi(t) = (t3(1), t2(1)), the sphere pair the triple sits over.
template <scalar_context C>
std::pair<vec<C>, vec<C>> pi(const algebra<C>& A, const triple<C>& t) {
    return {mat_vec(A.ctx, t.t3, A.unit), mat_vec(A.ctx, t.t2, A.unit)};
}

/// t . (u, v) = (t3 u, t2 v); pi(t) is the image of (1, 1).
template <scalar_context C>
std::pair<vec<C>, vec<C>> act_on_pair(const algebra<C>& A, const triple<C>& t,
                                      const std::pair<vec<C>, vec<C>>& p) {
    return {mat_vec(A.ctx, t.t3, p.first), mat_vec(A.ctx, t.t2, p.second)};
}

/// Delta(w, x, y) = b(w, conj(x) conj(y)), the trilinear form every related
/// triple preserves.
template <scalar_context C>
typename C::elem delta_form(const algebra<C>& A, const vec<C>& w, const vec<C>& x,
                            const vec<C>& y) {
    return A.b(w, A.mul(A.conj(x), A.conj(y)));
}

template <scalar_context C>
bool delta_invariant(const algebra<C>& A, const triple<C>& t) {
    const C& c = A.ctx;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j)
            for (int k = 0; k < A.n; ++k) {
                auto w = A.basis(i), x = A.basis(j), y = A.basis(k);
                auto lhs = delta_form(A, mat_vec(c, t.t1, w), mat_vec(c, t.t2, x),
                                      mat_vec(c, t.t3, y));
                if (!c.eq(lhs, delta_form(A, w, x, y))) return false;
            }
    return true;
}

/// From an algebra isomorphism f : C -> C^{a,b} to the related triple with
/// t1 = f: t2 = K R_a f K, t3 = K L_b f K. Round trip with pi is exact.
template <scalar_context C>
triple<C> triple_from_iso(const algebra<C>& A, const mat<C>& f, const vec<C>& a,
                          const vec<C>& b) {
    const C& c = A.ctx;
    auto K = A.Kmat();
    auto t2 = mat_mul(c, K, mat_mul(c, A.Rmat(a), mat_mul(c, f, K)));
    auto t3 = mat_mul(c, K, mat_mul(c, A.Lmat(b), mat_mul(c, f, K)));
    return {f, t2, t3};
}

/// eta of a related triple against a designated pair (a, b) with t1 an
/// isomorphism onto C^{a,b}. Note C^{-a,-b} has the same product and unit as
/// C^{a,b}, so the sign only exists relative to the chosen pair: +1 when
/// pi(t) = (a, b), -1 when pi(t) = (-a, -b) and the tail is the negated lift.
template <scalar_context C>
typename C::elem eta_of(const algebra<C>& A, const triple<C>& t, const vec<C>& a,
                        const vec<C>& b) {
    const C& c = A.ctx;
    auto p = pi(A, t);
    auto rt = triple_from_iso(A, t.t1, a, b);
    if (vec_eq(c, p.first, a) && vec_eq(c, p.second, b)) {
        require(triple_eq(c, rt, t), "eta_of: exact lift did not reproduce the triple");
        return c.one();
    }
    require(vec_eq(c, p.first, vec_neg(c, a)) && vec_eq(c, p.second, vec_neg(c, b)),
            "eta_of: pi(t) is neither (a,b) nor (-a,-b)");
    require(mat_eq(c, t.t2, mat_neg(c, rt.t2)) && mat_eq(c, t.t3, mat_neg(c, rt.t3)),
            "eta_of: negated lift did not reproduce the triple");
    return c.neg(c.one());
}

/// The autotopy form of the relation: g2 = K t2 K, g3 = K t3 K satisfy
/// t1(x y) = g2(x) g3(y).
template <scalar_context C>
triple<C> autotopy_components(const algebra<C>& A, const triple<C>& t) {
    const C& c = A.ctx;
    auto K = A.Kmat();
    return {t.t1, mat_mul(c, K, mat_mul(c, t.t2, K)), mat_mul(c, K, mat_mul(c, t.t3, K))};
}

template <scalar_context C>
bool is_autotopy(const algebra<C>& A, const triple<C>& g) {
    const C& c = A.ctx;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.n; ++j) {
            auto lhs = mat_vec(c, g.t1, A.mul(A.basis(i), A.basis(j)));
            auto rhs = A.mul(mat_vec(c, g.t2, A.basis(i)), mat_vec(c, g.t3, A.basis(j)));
            if (!vec_eq(c, lhs, rhs)) return false;
        }
    return true;
}

// ---- transport between the base algebra and an isotope ----

/// Conjugating a triple that is related over the materialized isotope C^{a,b}
/// (with its own conjugation) back into a triple related over the base algebra:
/// T^{a,b}(t) = (t1, B_b R_a t2 R_abar B_bbar, B_a L_b t3 L_bbar B_abar).
/// Needs q(a) = q(b) = 1. Multiplicative in t.
template <scalar_context C>
triple<C> twist_conjugate(const algebra<C>& A, const vec<C>& a, const vec<C>& b,
                          const triple<C>& t) {
    const C& c = A.ctx;
    auto ab = A.conj(a), bb = A.conj(b);
    auto m2 = mat_mul(c, A.Bmat(b),
                      mat_mul(c, A.Rmat(a), mat_mul(c, t.t2, mat_mul(c, A.Rmat(ab), A.Bmat(bb)))));
    auto m3 = mat_mul(c, A.Bmat(a),
                      mat_mul(c, A.Lmat(b), mat_mul(c, t.t3, mat_mul(c, A.Lmat(bb), A.Bmat(ab)))));
    return {t.t1, m2, m3};
}

/// s_{a,b} = (R_abar B_bbar, L_abar R_b, B_a L_b), related over the base algebra
/// for norm-one a, b.
template <scalar_context C>
triple<C> twist_reference_triple(const algebra<C>& A, const vec<C>& a, const vec<C>& b) {
    const C& c = A.ctx;
    auto ab = A.conj(a), bb = A.conj(b);
    return {mat_mul(c, A.Rmat(ab), A.Bmat(bb)), mat_mul(c, A.Lmat(ab), A.Rmat(b)),
            mat_mul(c, A.Bmat(a), A.Lmat(b))};
}

} // namespace octiso
