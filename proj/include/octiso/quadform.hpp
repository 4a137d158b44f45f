/** @file quadform.hpp
 *  Quadratic forms as upper-triangular coefficient matrices.
 *
 *  The coefficient representation (not the polar form) is what is stored, so
 *  characteristic 2 is handled without division by 2 anywhere. Two forms are
 *  equal exactly when their coefficient triangles match.
 */
#pragma once

#include <functional>

#include "octiso/linalg.hpp"

namespace octiso {

template <scalar_context C>
struct quad_form {
    int n = 0;
    std::vector<typename C::elem> upper; // coefficient of x_i x_j at tri_index(i, j), i <= j

    quad_form() = default;
    quad_form(const C& c, int rank) : n(rank), upper(std::size_t(rank) * (rank + 1) / 2, c.zero()) {}

    std::size_t tri_index(int i, int j) const {
        // row-major over the triangle i <= j
        return std::size_t(i) * n - std::size_t(i) * (i - 1) / 2 + std::size_t(j - i);
    }

    typename C::elem& coeff(int i, int j) { return upper[tri_index(i, j)]; }
    const typename C::elem& coeff(int i, int j) const { return upper[tri_index(i, j)]; }

    typename C::elem eval(const C& c, const vec<C>& x) const {
        auto s = c.zero();
        for (int i = 0; i < n; ++i) {
            if (c.is_zero(x[std::size_t(i)])) continue;
            for (int j = i; j < n; ++j) {
                const auto& u = coeff(i, j);
                if (c.is_zero(u) || c.is_zero(x[std::size_t(j)])) continue;
                s = c.add(s, c.mul(u, c.mul(x[std::size_t(i)], x[std::size_t(j)])));
            }
        }
        return s;
    }

    /// Polar form b(x, y) = q(x+y) - q(x) - q(y), evaluated directly from coefficients.
    typename C::elem polar(const C& c, const vec<C>& x, const vec<C>& y) const {
        auto s = c.zero();
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const auto& u = coeff(i, j);
                if (c.is_zero(u)) continue;
                auto t = c.mul(x[std::size_t(i)], y[std::size_t(j)]);
                t = c.add(t, c.mul(y[std::size_t(i)], x[std::size_t(j)]));
                s = c.add(s, c.mul(u, t));
            }
        return s;
    }

    mat<C> polar_matrix(const C& c) const {
        mat<C> B(c, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const auto& u = coeff(i, j);
                if (i == j) {
                    B.at(i, i) = c.add(u, u);
                } else {
                    B.at(i, j) = u;
                    B.at(j, i) = u;
                }
            }
        return B;
    }

    bool is_regular(const C& c) const { return c.is_unit(det(c, polar_matrix(c))); }

    quad_form scale(const C& c, const typename C::elem& s) const {
        quad_form r(*this);
        for (auto& u : r.upper) u = c.mul(s, u);
        return r;
    }

    bool equals(const C& c, const quad_form& o) const {
        if (n != o.n) return false;
        for (std::size_t i = 0; i < upper.size(); ++i)
            if (!c.eq(upper[i], o.upper[i])) return false;
        return true;
    }
};

/// T an isometry (source, q_src) -> (target, q_tgt): q_tgt(T x) = q_src(x).
/// Checking on e_i and e_i + e_j determines equality of the two forms x -> q_tgt(Tx)
/// and q_src as coefficient matrices, in every characteristic.
template <scalar_context C>
bool is_isometry(const C& c, const quad_form<C>& q_src, const quad_form<C>& q_tgt, const mat<C>& T) {
    int n = q_src.n;
    if (T.n != n || T.m != n || q_tgt.n != n) return false;
    for (int i = 0; i < n; ++i) {
        auto x = unit_vec(c, n, i);
        if (!c.eq(q_tgt.eval(c, mat_vec(c, T, x)), q_src.eval(c, x))) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto x = vec_add(c, unit_vec(c, n, i), unit_vec(c, n, j));
            if (!c.eq(q_tgt.eval(c, mat_vec(c, T, x)), q_src.eval(c, x))) return false;
        }
    return true;
}

template <scalar_context C>
bool is_isometry(const C& c, const quad_form<C>& q, const mat<C>& T) {
    return is_isometry(c, q, q, T);
}

/// Deterministic spanning family: sums of up to `depth` distinct basis vectors.
/// Sums of one and two already decide equality of biquadratic forms; the deeper
/// sums are kept as redundancy.
template <scalar_context C>
std::vector<vec<C>> spanning_family(const C& c, int n, int depth = 4) {
    std::vector<vec<C>> fam;
    std::vector<int> idx;
    std::function<void(int, int)> rec = [&](int start, int remaining) {
        if (!idx.empty()) {
            vec<C> v(std::size_t(n), c.zero());
            for (int i : idx) v[std::size_t(i)] = c.one();
            fam.push_back(std::move(v));
        }
        if (remaining == 0) return;
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1, remaining - 1);
            idx.pop_back();
        }
    };
    rec(0, depth);
    return fam;
}

/// Decision procedure for q1(f(x, y)) = q2(x) q3(y) as an identity of biquadratic
/// forms (hence valid over every extension of the ring). Evaluating both sides on
/// all pairs from the spanning family pins every coefficient.
template <scalar_context C, class F>
bool is_composition(const C& c, const quad_form<C>& q1, const quad_form<C>& q2,
                    const quad_form<C>& q3, F&& f, int depth = 4) {
    int n = q2.n;
    auto fam = spanning_family(c, n, depth);
    for (const auto& x : fam) {
        auto q2x = q2.eval(c, x);
        for (const auto& y : fam) {
            auto lhs = q1.eval(c, f(x, y));
            auto rhs = c.mul(q2x, q3.eval(c, y));
            if (!c.eq(lhs, rhs)) return false;
        }
    }
    return true;
}

/// Exhaustive multiplicativity check over a finite coefficient field.
template <scalar_context C, class F>
bool is_composition_exhaustive(const C& c, const quad_form<C>& q1, const quad_form<C>& q2,
                               const quad_form<C>& q3, F&& f, unsigned long field_size) {
    int n = q2.n;
    unsigned long total = 1;
    for (int i = 0; i < n; ++i) {
        total *= field_size;
        require(total <= (1ul << 20), "exhaustive composition check too large");
    }
    std::vector<vec<C>> all;
    all.reserve(total);
    vec<C> cur(std::size_t(n), c.zero());
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            all.push_back(cur);
            return;
        }
        for (unsigned long v = 0; v < field_size; ++v) {
            cur[std::size_t(pos)] = c.element(v);
            rec(pos + 1);
        }
    };
    rec(0);
    for (const auto& x : all) {
        auto q2x = q2.eval(c, x);
        for (const auto& y : all) {
            if (!c.eq(q1.eval(c, f(x, y)), c.mul(q2x, q3.eval(c, y)))) return false;
        }
    }
    return true;
}

} // namespace octiso
