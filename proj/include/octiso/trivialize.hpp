/** @file trivialize.hpp
 *  Explicit isomorphisms C -> C^{a, conj a} built from conjugation-like maps.
 *
 *  tau+_c(x) = ((c x) c) c and tau-_c(x) = (c^{-2} x) c^{-1}; both have a second
 *  bracketing that must agree (Artin), asserted on every call. The pointwise
 *  identity c((conj x conj y) c^{-1}) = tau+_c(conj x) tau-_c(conj y) makes
 *  (L_c R_c^{-1}, tau-_c, tau+_c) a related triple for q(c) = 1, and chaining
 *  the maps L_c R_c^{-1} along c_1, ..., c_r with tau+ composite hitting a
 *  gives the trivializing witness.
 */
#pragma once

#include "octiso/triality.hpp"

namespace octiso {

template <scalar_context C>
vec<C> tau_plus(const algebra<C>& A, const vec<C>& c, const vec<C>& x) {
    const C& k = A.ctx;
    auto r = A.mul(A.mul(A.mul(c, x), c), c);
    auto c2 = A.mul(c, c);
    require(vec_eq(k, r, A.mul(A.mul(c, x), c2)) && vec_eq(k, r, A.mul(c, A.mul(x, c2))),
            "tau+ bracketings disagree");
    return r;
}

template <scalar_context C>
vec<C> tau_minus(const algebra<C>& A, const vec<C>& c, const vec<C>& x) {
    const C& k = A.ctx;
    auto ci = A.inverse(c);
    auto ci2 = A.mul(ci, ci);
    auto r = A.mul(A.mul(ci2, x), ci);
    require(vec_eq(k, r, A.mul(ci2, A.mul(x, ci))), "tau- bracketings disagree");
    return r;
}

template <scalar_context C>
mat<C> tau_plus_mat(const algebra<C>& A, const vec<C>& c) {
    std::vector<vec<C>> cols;
    for (int j = 0; j < A.n; ++j) cols.push_back(tau_plus(A, c, A.basis(j)));
    return mat_from_columns(A.ctx, cols);
}

template <scalar_context C>
mat<C> tau_minus_mat(const algebra<C>& A, const vec<C>& c) {
    std::vector<vec<C>> cols;
    for (int j = 0; j < A.n; ++j) cols.push_back(tau_minus(A, c, A.basis(j)));
    return mat_from_columns(A.ctx, cols);
}

/// x -> c (x c^{-1}); equals Lmat(c) Rmat(c)^{-1} since R_{c^{-1}} = R_c^{-1}.
template <scalar_context C>
mat<C> conj_map(const algebra<C>& A, const vec<C>& c) {
    return mat_mul(A.ctx, A.Lmat(c), A.Rmat(A.inverse(c)));
}

/// Both shapes of the pointwise identity at (x, y).
template <scalar_context C>
bool conjugation_identity_holds(const algebra<C>& A, const vec<C>& c, const vec<C>& x,
                                const vec<C>& y) {
    const C& k = A.ctx;
    auto xb = A.conj(x), yb = A.conj(y);
    auto lhs = A.mul(c, A.mul(A.mul(xb, yb), A.inverse(c)));
    auto rhs1 = A.mul(tau_plus(A, c, xb), tau_minus(A, c, yb));
    auto rhs2 = A.mul(A.conj(tau_minus(A, c, x)), A.conj(tau_plus(A, c, y)));
    return vec_eq(k, lhs, rhs1) && vec_eq(k, lhs, rhs2);
}

/// (L_c R_c^{-1}, tau-_c, tau+_c); related when q(c) = 1.
template <scalar_context C>
triple<C> tau_triple(const algebra<C>& A, const vec<C>& c) {
    return {conj_map(A, c), tau_minus_mat(A, c), tau_plus_mat(A, c)};
}

// ---- trivializations: witnesses for C ~ C^{a, conj a} ----

template <scalar_context C>
struct trivialization {
    vec<C> a;                  // the norm-one target
    std::vector<vec<C>> chain; // c_1 ... c_r, applied left factor last
    std::string method;        // cube | traceless | orthogonal | bchain | lchain
    mat<C> witness;            // isomorphism C -> C^{a, conj a}
};

template <scalar_context C>
bool check_trivialization(const algebra<C>& A, const trivialization<C>& w) {
    return is_algebra_isomorphism(A, isotope(A, w.a, A.conj(w.a)), w.witness);
}

/// Chain form (1): when the two iterated left multiplications agree,
/// L_{c_r} ... L_{c_1}(1) = L_{conj c_r} ... L_{conj c_1}(1) = a with q(a) = 1,
/// the product B_{conj c_r} ... B_{conj c_1} is an isomorphism C -> C^{a, conj a}.
template <scalar_context C>
trivialization<C> chain_iso_item1(const algebra<C>& A, const std::vector<vec<C>>& cs) {
    const C& k = A.ctx;
    require(!cs.empty(), "empty chain");
    auto a = A.unit, abar = A.unit;
    auto W = mat<C>::identity(k, A.n);
    for (const auto& c : cs) {
        require(A.is_invertible(c), "chain elements must be invertible");
        a = A.mul(c, a);
        abar = A.mul(A.conj(c), abar);
        W = mat_mul(k, A.Bmat(A.conj(c)), W);
    }
    if (!vec_eq(k, a, abar) || !k.eq(A.q(a), k.one()))
        throw precondition_error(
            "left-multiplication chain: the two products disagree or land off the sphere");
    return {a, cs, "lchain", W};
}

/// Chain form (2): a = tau+_{c_r} ... tau+_{c_1}(1) with q(a) = 1; the witness
/// is the product of the maps x -> c_i (x c_i^{-1}).
template <scalar_context C>
trivialization<C> chain_iso_item2(const algebra<C>& A, const std::vector<vec<C>>& cs,
                                  std::string method = "chain") {
    const C& k = A.ctx;
    require(!cs.empty(), "empty chain");
    auto a = A.unit;
    auto W = mat<C>::identity(k, A.n);
    for (const auto& c : cs) {
        require(A.is_invertible(c), "chain elements must be invertible");
        a = tau_plus(A, c, a);
        W = mat_mul(k, conj_map(A, c), W);
    }
    if (!k.eq(A.q(a), k.one()))
        throw precondition_error("tau+ chain lands off the sphere");
    return {a, cs, std::move(method), W};
}

/// a = c^3 for norm-one c: witness L_c R_c^{-1}.
template <scalar_context C>
trivialization<C> cube_trivialization(const algebra<C>& A, const vec<C>& c) {
    const C& k = A.ctx;
    require(k.eq(A.q(c), k.one()), "cube case needs q(c) = 1");
    auto a = A.mul(c, A.mul(c, c));
    require(vec_eq(k, a, A.mul(A.mul(c, c), c)), "cube bracketings disagree");
    auto w = chain_iso_item2(A, {c}, "cube");
    require(vec_eq(k, w.a, a), "tau+_c(1) != c^3");
    return w;
}

/// Traceless a of norm one: a = (-a)^3, so the cube case applies with c = -a.
template <scalar_context C>
trivialization<C> traceless_trivialization(const algebra<C>& A, const vec<C>& a) {
    const C& k = A.ctx;
    require(k.is_zero(A.trace(a)) && k.eq(A.q(a), k.one()),
            "traceless case needs tr(a) = 0, q(a) = 1");
    auto na = vec_neg(k, a);
    auto w = cube_trivialization(A, na);
    require(vec_eq(k, w.a, a), "(-a)^3 != a");
    w.a = a;
    w.method = "traceless";
    return w;
}

/// u orthogonal to 1 and to a, q(u) a unit: chain c_1 = u^{-1}, c_2 = a u.
/// Uses u conj(a) = a u (forced by the orthogonality) and tau+ composite
/// tau+_{c_2} tau+_{c_1} (1) = a.
template <scalar_context C>
trivialization<C> orthogonal_trivialization(const algebra<C>& A, const vec<C>& a,
                                            const vec<C>& u) {
    const C& k = A.ctx;
    require(k.eq(A.q(a), k.one()), "target must have norm one");
    require(k.is_zero(A.b(u, A.unit)) && k.is_zero(A.b(u, a)), "u must be orthogonal to 1 and a");
    require(k.is_unit(A.q(u)), "q(u) must be a unit");
    require(vec_eq(k, A.mul(u, A.conj(a)), A.mul(a, u)), "u conj(a) != a u");
    auto c1 = A.inverse(u);
    auto c2 = A.mul(a, u);
    auto w = chain_iso_item2(A, {c1, c2}, "orthogonal");
    require(vec_eq(k, w.a, a), "tau+ chain misses the target");
    return w;
}

/// Two traceless norm-one factors: a = c_2 c_1, witness B_{conj c_2} B_{conj c_1}.
/// (Tracelessness makes the two left-multiplication products in chain form (1)
/// agree sign by sign.)
template <scalar_context C>
trivialization<C> bchain_trivialization(const algebra<C>& A, const vec<C>& c1, const vec<C>& c2) {
    const C& k = A.ctx;
    for (const auto& ci : {c1, c2})
        require(k.is_zero(A.trace(ci)) && k.eq(A.q(ci), k.one()),
                "bchain factors must be traceless of norm one");
    auto w = chain_iso_item1(A, {c1, c2});
    require(vec_eq(k, w.a, A.mul(c2, c1)), "chain product mismatch");
    w.method = "bchain";
    return w;
}

/// Full decision over a field: given q(a) = 1 produce some trivialization.
/// Scalar a: cube with c = a. Traceless a: cube with c = -a. Otherwise find u
/// with b(u, 1) = b(u, a) = 0 and q(u) != 0 by sweeping the solution space of
/// the two linear conditions, and run the orthogonal case.
template <scalar_context C>
trivialization<C> field_trivialize(const algebra<C>& A, const vec<C>& a) {
    const C& k = A.ctx;
    require(k.is_field(), "field_trivialize needs a field");
    require(k.eq(A.q(a), k.one()), "target must have norm one");
    // scalar target?
    bool scalar_target = true;
    for (int i = 0; i < A.n && scalar_target; ++i)
        if (!k.eq(a[std::size_t(i)], k.mul(a[0], A.unit[std::size_t(i)]))) scalar_target = false;
    if (scalar_target && !k.is_zero(a[0])) {
        auto w = cube_trivialization(A, a);
        require(vec_eq(k, w.a, a), "scalar cube misses target"); // a^3 = q(a) a = a
        return w;
    }
    if (k.is_zero(A.trace(a))) return traceless_trivialization(A, a);

    mat<C> M(k, 2, A.n);
    for (int j = 0; j < A.n; ++j) {
        M.at(0, j) = A.b(A.basis(j), A.unit);
        M.at(1, j) = A.b(A.basis(j), a);
    }
    auto sol = solve_linear(k, M, vec<C>(2, k.zero()));
    const auto& ker = sol.kernel;
    auto try_u = [&](const vec<C>& u) -> bool { return !k.is_zero(A.q(u)); };
    auto build = [&](const std::vector<std::pair<std::size_t, typename C::elem>>& combo) {
        vec<C> u(std::size_t(A.n), k.zero());
        for (const auto& [i, s] : combo) u = vec_add(k, u, vec_scale(k, s, ker[i]));
        return u;
    };
    // single vectors, then pairs with small coefficients
    for (std::size_t i = 0; i < ker.size(); ++i) {
        auto u = build({{i, k.one()}});
        if (try_u(u)) return orthogonal_trivialization(A, a, u);
    }
    std::vector<typename C::elem> coeffs{k.one(), k.neg(k.one()), k.add(k.one(), k.one())};
    for (std::size_t i = 0; i < ker.size(); ++i)
        for (std::size_t j = i + 1; j < ker.size(); ++j)
            for (const auto& s : coeffs) {
                auto u = build({{i, k.one()}, {j, s}});
                if (try_u(u)) return orthogonal_trivialization(A, a, u);
            }
    // exhaustive over small finite fields (the solution space is tiny there)
    unsigned long fsz = k.size();
    if (fsz != 0 && fsz <= 9 && ker.size() <= 6) {
        std::vector<unsigned long> digits(ker.size(), 0);
        while (true) {
            std::vector<std::pair<std::size_t, typename C::elem>> combo;
            for (std::size_t i = 0; i < ker.size(); ++i)
                if (digits[i]) combo.push_back({i, k.element(digits[i])});
            if (!combo.empty()) {
                auto u = build(combo);
                if (try_u(u)) return orthogonal_trivialization(A, a, u);
            }
            std::size_t i = 0;
            while (i < digits.size() && ++digits[i] == fsz) digits[i++] = 0;
            if (i == digits.size()) break;
        }
    }
    throw no_solution("no anisotropic vector orthogonal to 1 and the target");
}

} // namespace octiso
