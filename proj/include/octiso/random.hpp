/** @file random.hpp
 *  Seeded samplers. All draws go through mt19937_64 and explicit modulo so the
 *  same seed gives the same elements on every platform (uniform_int_distribution
 *  is not portable across standard libraries).
 */
#pragma once

#include <random>

#include "octiso/algebra.hpp"

namespace octiso {

using rng = std::mt19937_64;

inline long draw(rng& g, long lo, long hi) { // inclusive bounds
    return lo + long(g() % (unsigned long)(hi - lo + 1));
}

template <scalar_context C>
typename C::elem rand_scalar(const C& c, rng& g) {
    if constexpr (std::is_same_v<C, fq_ctx>) {
        return typename C::elem(g() % c.q);
    } else {
        const ring* R = c.R;
        switch (R->kind) {
        case ring_kind::integers:
            return R->from_long(draw(g, -4, 4));
        case ring_kind::rationals: {
            mpq_class r(draw(g, -4, 4), draw(g, 1, 3));
            r.canonicalize();
            return scalar{R, r};
        }
        case ring_kind::mod_n: {
            unsigned long m = mpz_get_ui(R->modulus.get_mpz_t());
            return R->from_long(long(g() % m));
        }
        case ring_kind::finite_field:
            return R->element(g() % (unsigned long)R->size());
        case ring_kind::poly:
        case ring_kind::laurent: {
            // low-degree element with small coefficients from the base ring
            ring_ctx bc(R->coeff.get());
            std::vector<scalar> coeffs;
            int deg = int(draw(g, 0, 2));
            for (int i = 0; i <= deg; ++i) coeffs.push_back(rand_scalar(bc, g));
            while (!coeffs.empty() && bc.is_zero(coeffs.back())) coeffs.pop_back();
            if (coeffs.empty()) return R->from_long(0);
            if (R->kind == ring_kind::poly) return scalar(R, poly_data{std::move(coeffs)});
            long low = draw(g, -1, 0);
            std::size_t first = 0;
            while (bc.is_zero(coeffs[first])) { ++first; ++low; }
            coeffs.erase(coeffs.begin(), coeffs.begin() + long(first));
            return scalar(R, laurent_data{low, std::move(coeffs)});
        }
        }
        throw precondition_error("rand_scalar: unknown ring kind");
    }
}

template <scalar_context C>
vec<C> rand_vec(const C& c, int n, rng& g) {
    vec<C> v;
    v.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i) v.push_back(rand_scalar(c, g));
    return v;
}

template <scalar_context C>
vec<C> rand_element(const algebra<C>& A, rng& g) {
    return rand_vec(A.ctx, A.n, g);
}

namespace detail {

/// Zorn coordinates: a = x0, b = x1, v = (x2, x3, x4), w = (x5, x6, x7),
/// q = ab - v.w. Solve w1 so that the norm comes out as requested: works over
/// every ring since v1 is pinned to 1.
template <scalar_context C>
vec<C> zorn_with_norm(const algebra<C>& A, const typename C::elem& target, rng& g) {
    const C& c = A.ctx;
    vec<C> x(8, c.zero());
    x[0] = c.one();
    x[1] = rand_scalar(c, g);
    x[2] = c.one();
    for (int i : {3, 4, 6, 7}) x[std::size_t(i)] = rand_scalar(c, g);
    // a b - (v1 w1 + v2 w2 + v3 w3) = target with a = v1 = 1
    auto rest = c.add(c.mul(x[3], x[6]), c.mul(x[4], x[7]));
    x[5] = c.sub(x[1], c.add(target, rest));
    return x;
}

} // namespace detail

/// Norm-one element. Fields: second intersection of a random chord through the
/// unit. Zorn algebras over any ring: constructive, then stirred by one extra
/// sphere factor so coordinates do not cluster.
template <scalar_context C>
vec<C> rand_sphere(const algebra<C>& A, rng& g) {
    const C& c = A.ctx;
    if (c.is_field()) {
        for (int tries = 0; tries < 4096; ++tries) {
            auto d = rand_element(A, g);
            auto qd = A.q(d);
            if (c.is_zero(qd)) continue;
            auto t = c.neg(c.mul(A.b(A.unit, d), c.inv(qd)));
            auto x = vec_add(c, A.unit, vec_scale(c, t, d));
            return x;
        }
        throw precondition_error("rand_sphere: no anisotropic direction found");
    }
    require(A.name == "zorn", "rand_sphere over a non-field needs the split construction");
    auto x = detail::zorn_with_norm(A, c.one(), g);
    auto y = detail::zorn_with_norm(A, c.one(), g);
    return A.mul(x, y);
}

/// Element with q(x) a unit. Rejection first, then a norm-one fallback.
template <scalar_context C>
vec<C> rand_invertible(const algebra<C>& A, rng& g) {
    for (int tries = 0; tries < 256; ++tries) {
        auto x = rand_element(A, g);
        if (A.is_invertible(x)) return x;
    }
    return rand_sphere(A, g);
}

/// Trace-zero element of norm one (split construction: [[a, v], [w, -a]] with
/// v.w = -1 - a^2).
template <scalar_context C>
vec<C> rand_sphere_traceless(const algebra<C>& A, rng& g) {
    const C& c = A.ctx;
    require(A.name == "zorn", "traceless sphere sampler needs the split construction");
    vec<C> x(8, c.zero());
    auto a = rand_scalar(c, g);
    x[0] = a;
    x[1] = c.neg(a);
    x[2] = c.one();
    for (int i : {3, 4, 6, 7}) x[std::size_t(i)] = rand_scalar(c, g);
    auto rest = c.add(c.mul(x[3], x[6]), c.mul(x[4], x[7]));
    // w1 = -1 - a^2 - v2 w2 - v3 w3
    x[5] = c.neg(c.add(c.one(), c.add(c.mul(a, a), rest)));
    return x;
}

} // namespace octiso
