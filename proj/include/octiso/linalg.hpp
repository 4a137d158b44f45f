/** @file linalg.hpp
 *  Exact dense linear algebra over a scalar context.
 *
 *  Determinants: Gaussian elimination over fields, Bareiss over other integral
 *  domains, Berkowitz (division-free) over arbitrary commutative rings. Inverses
 *  go through Gauss-Jordan over fields and the characteristic-polynomial adjugate
 *  elsewhere; a non-unit determinant raises not_invertible carrying that value.
 */
#pragma once

#include <optional>
#include <vector>

#include "octiso/ctx.hpp"

namespace octiso {

template <scalar_context C>
using vec = std::vector<typename C::elem>;

template <scalar_context C>
struct mat {
    int n = 0, m = 0;
    std::vector<typename C::elem> a;

    mat() = default;
    mat(const C& c, int rows, int cols) : n(rows), m(cols), a(std::size_t(rows) * cols, c.zero()) {}

    typename C::elem& at(int i, int j) { return a[std::size_t(i) * m + j]; }
    const typename C::elem& at(int i, int j) const { return a[std::size_t(i) * m + j]; }

    static mat identity(const C& c, int n) {
        mat r(c, n, n);
        for (int i = 0; i < n; ++i) r.at(i, i) = c.one();
        return r;
    }
};

// ---- vector ops ----

template <scalar_context C>
vec<C> vec_add(const C& c, const vec<C>& x, const vec<C>& y) {
    vec<C> r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c.add(r[i], y[i]);
    return r;
}

template <scalar_context C>
vec<C> vec_sub(const C& c, const vec<C>& x, const vec<C>& y) {
    vec<C> r(x);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = c.sub(r[i], y[i]);
    return r;
}

template <scalar_context C>
vec<C> vec_neg(const C& c, const vec<C>& x) {
    vec<C> r(x);
    for (auto& v : r) v = c.neg(v);
    return r;
}

template <scalar_context C>
vec<C> vec_scale(const C& c, const typename C::elem& s, const vec<C>& x) {
    vec<C> r(x);
    for (auto& v : r) v = c.mul(s, v);
    return r;
}

template <scalar_context C>
bool vec_eq(const C& c, const vec<C>& x, const vec<C>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!c.eq(x[i], y[i])) return false;
    return true;
}

template <scalar_context C>
bool vec_is_zero(const C& c, const vec<C>& x) {
    for (const auto& v : x)
        if (!c.is_zero(v)) return false;
    return true;
}

template <scalar_context C>
vec<C> unit_vec(const C& c, int n, int i) {
    vec<C> r(std::size_t(n), c.zero());
    r[std::size_t(i)] = c.one();
    return r;
}

// ---- matrix ops ----

template <scalar_context C>
mat<C> mat_mul(const C& c, const mat<C>& A, const mat<C>& B) {
    require(A.m == B.n, "matrix size mismatch");
    mat<C> r(c, A.n, B.m);
    for (int i = 0; i < A.n; ++i)
        for (int k = 0; k < A.m; ++k) {
            const auto& aik = A.at(i, k);
            if (c.is_zero(aik)) continue;
            for (int j = 0; j < B.m; ++j)
                r.at(i, j) = c.add(r.at(i, j), c.mul(aik, B.at(k, j)));
        }
    return r;
}

template <scalar_context C>
vec<C> mat_vec(const C& c, const mat<C>& A, const vec<C>& x) {
    require(A.m == int(x.size()), "matrix size mismatch");
    vec<C> r(std::size_t(A.n), c.zero());
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.m; ++j)
            if (!c.is_zero(A.at(i, j))) r[std::size_t(i)] = c.add(r[std::size_t(i)], c.mul(A.at(i, j), x[std::size_t(j)]));
    return r;
}

template <scalar_context C>
mat<C> mat_add(const C& c, const mat<C>& A, const mat<C>& B) {
    mat<C> r(A);
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = c.add(r.a[i], B.a[i]);
    return r;
}

template <scalar_context C>
mat<C> mat_scale(const C& c, const typename C::elem& s, const mat<C>& A) {
    mat<C> r(A);
    for (auto& v : r.a) v = c.mul(s, v);
    return r;
}

template <scalar_context C>
mat<C> mat_neg(const C& c, const mat<C>& A) {
    mat<C> r(A);
    for (auto& v : r.a) v = c.neg(v);
    return r;
}

template <scalar_context C>
mat<C> transpose(const C& c, const mat<C>& A) {
    mat<C> r(c, A.m, A.n);
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.m; ++j) r.at(j, i) = A.at(i, j);
    return r;
}

template <scalar_context C>
bool mat_eq(const C& c, const mat<C>& A, const mat<C>& B) {
    if (A.n != B.n || A.m != B.m) return false;
    for (std::size_t i = 0; i < A.a.size(); ++i)
        if (!c.eq(A.a[i], B.a[i])) return false;
    return true;
}

template <scalar_context C>
bool is_identity(const C& c, const mat<C>& A) {
    if (A.n != A.m) return false;
    for (int i = 0; i < A.n; ++i)
        for (int j = 0; j < A.m; ++j)
            if (!c.eq(A.at(i, j), i == j ? c.one() : c.zero())) return false;
    return true;
}

template <scalar_context C>
mat<C> mat_from_columns(const C& c, const std::vector<vec<C>>& cols) {
    require(!cols.empty(), "no columns");
    mat<C> r(c, int(cols[0].size()), int(cols.size()));
    for (int j = 0; j < r.m; ++j)
        for (int i = 0; i < r.n; ++i) r.at(i, j) = cols[std::size_t(j)][std::size_t(i)];
    return r;
}

template <scalar_context C>
vec<C> column(const mat<C>& A, int j) {
    vec<C> r;
    r.reserve(std::size_t(A.n));
    for (int i = 0; i < A.n; ++i) r.push_back(A.at(i, j));
    return r;
}

// ---- determinant ----

namespace detail {

template <scalar_context C>
typename C::elem det_gauss(const C& c, mat<C> A) {
    int n = A.n;
    auto det = c.one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!c.is_zero(A.at(r, col))) { piv = r; break; }
        if (piv < 0) return c.zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            det = c.neg(det);
        }
        det = c.mul(det, A.at(col, col));
        auto pinv = c.inv(A.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (c.is_zero(A.at(r, col))) continue;
            auto f = c.mul(A.at(r, col), pinv);
            for (int j = col; j < n; ++j) A.at(r, j) = c.sub(A.at(r, j), c.mul(f, A.at(col, j)));
        }
    }
    return det;
}

template <scalar_context C>
typename C::elem det_bareiss(const C& c, mat<C> A) {
    int n = A.n;
    auto prev = c.one();
    bool negate = false;
    for (int col = 0; col < n - 1; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!c.is_zero(A.at(r, col))) { piv = r; break; }
        if (piv < 0) return c.zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A.at(piv, j), A.at(col, j));
            negate = !negate;
        }
        for (int r = col + 1; r < n; ++r) {
            for (int j = col + 1; j < n; ++j) {
                auto v = c.sub(c.mul(A.at(r, j), A.at(col, col)), c.mul(A.at(r, col), A.at(col, j)));
                A.at(r, j) = c.divexact(v, prev);
            }
            A.at(r, col) = c.zero();
        }
        prev = A.at(col, col);
    }
    auto d = A.at(n - 1, n - 1);
    return negate ? c.neg(d) : d;
}

} // namespace detail

/// Coefficients of det(lambda I - A), monic, length n+1, leading first.
template <scalar_context C>
std::vector<typename C::elem> charpoly(const C& c, const mat<C>& A) {
    int n = A.n;
    require(n == A.m, "charpoly needs a square matrix");
    require(n >= 1, "charpoly needs n >= 1");
    std::vector<typename C::elem> v{c.neg(c.one()), A.at(0, 0)};
    for (int r = 1; r < n; ++r) {
        // Toeplitz column: t = (-1, a_rr, row*col, row*M*col, row*M^2*col, ...)
        std::vector<typename C::elem> t;
        t.push_back(c.neg(c.one()));
        t.push_back(A.at(r, r));
        vec<C> w(std::size_t(r), c.zero());
        for (int i = 0; i < r; ++i) w[std::size_t(i)] = A.at(i, r);
        for (int k = 0; k < r; ++k) {
            auto s = c.zero();
            for (int i = 0; i < r; ++i) s = c.add(s, c.mul(A.at(r, i), w[std::size_t(i)]));
            t.push_back(s);
            if (k + 1 < r) {
                vec<C> w2(std::size_t(r), c.zero());
                for (int i = 0; i < r; ++i) {
                    for (int j = 0; j < r; ++j)
                        if (!c.is_zero(A.at(i, j)))
                            w2[std::size_t(i)] = c.add(w2[std::size_t(i)], c.mul(A.at(i, j), w[std::size_t(j)]));
                }
                w = std::move(w2);
            }
        }
        std::vector<typename C::elem> nv(v.size() + 1, c.zero());
        for (std::size_t i = 0; i < nv.size(); ++i)
            for (std::size_t j = 0; j <= i && j < v.size(); ++j)
                if (i - j < t.size()) nv[i] = c.add(nv[i], c.mul(t[i - j], v[j]));
        v = std::move(nv);
    }
    // normalize to monic
    if (c.eq(v[0], c.neg(c.one())))
        for (auto& x : v) x = c.neg(x);
    require(c.eq(v[0], c.one()), "charpoly leading coefficient not +-1");
    return v;
}

template <scalar_context C>
typename C::elem det(const C& c, const mat<C>& A) {
    require(A.n == A.m, "determinant needs a square matrix");
    if (A.n == 0) return c.one();
    if (c.is_field()) return detail::det_gauss(c, A);
    if (c.is_integral_domain()) return detail::det_bareiss(c, A);
    auto p = charpoly(c, A);
    auto d = p.back(); // p(0) = (-1)^n det A
    return (A.n % 2 == 1) ? c.neg(d) : d;
}

/// Adjugate from the characteristic polynomial (division-free).
template <scalar_context C>
mat<C> adjugate(const C& c, const mat<C>& A) {
    int n = A.n;
    require(n == A.m && n >= 1, "adjugate needs a square matrix");
    auto p = charpoly(c, A);
    // adj(A) = (-1)^{n-1} (A^{n-1} + p1 A^{n-2} + ... + p_{n-1} I), Horner form
    mat<C> B(c, n, n);
    for (int i = 0; i < n; ++i) B.at(i, i) = c.one(); // running value, starts at I
    for (int k = 1; k < n; ++k) {
        B = mat_mul(c, B, A);
        for (int i = 0; i < n; ++i) B.at(i, i) = c.add(B.at(i, i), p[std::size_t(k)]);
    }
    if (n % 2 == 0) B = mat_neg(c, B);
    return B;
}

template <scalar_context C>
mat<C> mat_inverse(const C& c, const mat<C>& A) {
    int n = A.n;
    require(n == A.m, "inverse needs a square matrix");
    if (c.is_field()) {
        mat<C> M(A), I = mat<C>::identity(c, n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!c.is_zero(M.at(r, col))) { piv = r; break; }
            if (piv < 0) throw not_invertible(c.str(c.zero()));
            if (piv != col)
                for (int j = 0; j < n; ++j) {
                    std::swap(M.at(piv, j), M.at(col, j));
                    std::swap(I.at(piv, j), I.at(col, j));
                }
            auto pinv = c.inv(M.at(col, col));
            for (int j = 0; j < n; ++j) {
                M.at(col, j) = c.mul(pinv, M.at(col, j));
                I.at(col, j) = c.mul(pinv, I.at(col, j));
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || c.is_zero(M.at(r, col))) continue;
                auto f = M.at(r, col);
                for (int j = 0; j < n; ++j) {
                    M.at(r, j) = c.sub(M.at(r, j), c.mul(f, M.at(col, j)));
                    I.at(r, j) = c.sub(I.at(r, j), c.mul(f, I.at(col, j)));
                }
            }
        }
        return I;
    }
    auto d = det(c, A);
    if (!c.is_unit(d)) throw not_invertible(c.str(d));
    return mat_scale(c, c.inv(d), adjugate(c, A));
}

// ---- linear systems over fields ----

template <scalar_context C>
struct linear_solution {
    bool solvable = false;
    vec<C> particular;           // one solution (free variables set to zero)
    std::vector<vec<C>> kernel;  // basis of the homogeneous solution space
};

/// Solve A x = rhs over a field; kernel basis always reported.
template <scalar_context C>
linear_solution<C> solve_linear(const C& c, const mat<C>& A, const vec<C>& rhs) {
    require(c.is_field(), "solve_linear requires a field");
    require(A.n == int(rhs.size()), "rhs size mismatch");
    int n = A.n, m = A.m;
    mat<C> M(c, n, m + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, m) = rhs[std::size_t(i)];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!c.is_zero(M.at(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j <= m; ++j) std::swap(M.at(piv, j), M.at(row, j));
        auto pinv = c.inv(M.at(row, col));
        for (int j = 0; j <= m; ++j) M.at(row, j) = c.mul(pinv, M.at(row, j));
        for (int r = 0; r < n; ++r) {
            if (r == row || c.is_zero(M.at(r, col))) continue;
            auto f = M.at(r, col);
            for (int j = 0; j <= m; ++j) M.at(r, j) = c.sub(M.at(r, j), c.mul(f, M.at(row, j)));
        }
        pivot_col.push_back(col);
        ++row;
    }
    linear_solution<C> out;
    for (int r = row; r < n; ++r)
        if (!c.is_zero(M.at(r, m))) return out; // inconsistent
    out.solvable = true;
    out.particular.assign(std::size_t(m), c.zero());
    for (int r = 0; r < int(pivot_col.size()); ++r)
        out.particular[std::size_t(pivot_col[std::size_t(r)])] = M.at(r, m);
    std::vector<bool> is_pivot(std::size_t(m), false);
    for (int pc : pivot_col) is_pivot[std::size_t(pc)] = true;
    for (int col = 0; col < m; ++col) {
        if (is_pivot[std::size_t(col)]) continue;
        vec<C> k(std::size_t(m), c.zero());
        k[std::size_t(col)] = c.one();
        for (int r = 0; r < int(pivot_col.size()); ++r)
            k[std::size_t(pivot_col[std::size_t(r)])] = c.neg(M.at(r, col));
        out.kernel.push_back(std::move(k));
    }
    return out;
}

template <scalar_context C>
int rank(const C& c, mat<C> M) {
    require(c.is_field(), "rank requires a field");
    int n = M.n, m = M.m, row = 0;
    for (int col = 0; col < m && row < n; ++col) {
        int piv = -1;
        for (int r = row; r < n; ++r)
            if (!c.is_zero(M.at(r, col))) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m; ++j) std::swap(M.at(piv, j), M.at(row, j));
        auto pinv = c.inv(M.at(row, col));
        for (int j = 0; j < m; ++j) M.at(row, j) = c.mul(pinv, M.at(row, j));
        for (int r = 0; r < n; ++r) {
            if (r == row || c.is_zero(M.at(r, col))) continue;
            auto f = M.at(r, col);
            for (int j = 0; j < m; ++j) M.at(r, j) = c.sub(M.at(r, j), c.mul(f, M.at(row, j)));
        }
        ++row;
    }
    return row;
}

} // namespace octiso
