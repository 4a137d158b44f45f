/** @file clifford.hpp
 *  The even Clifford picture on C + C (16 x 16 matrices):
 *      alpha(x) = [ 0         L_conj(x) K ]
 *                 [ K L_x     0           ]
 *  so alpha(x)^2 = q(x) I and alpha(x) alpha(y) + alpha(y) alpha(x) = b(x, y) I.
 *
 *  The standard involution is sigma(M) = G^{-1} M^T G with G the polar Gram of
 *  q perp q; alpha(x) is sigma-fixed. Spin elements are the even u with
 *  u sigma(u) = I whose conjugation stabilizes alpha(C); reading the induced
 *  maps off the blocks gives a related triple (u1, u2, u3) with u = diag(u3, u2).
 */
#pragma once

#include "octiso/triality.hpp"

namespace octiso {

template <scalar_context C>
struct clifford_rep {
    const algebra<C>* A = nullptr;
    mat<C> K;    // conjugation on C
    mat<C> G;    // 2n x 2n polar Gram of q perp q
    mat<C> Ginv;

    explicit clifford_rep(const algebra<C>& alg) : A(&alg), K(alg.Kmat()) {
        const C& c = alg.ctx;
        int n = alg.n;
        auto Gq = alg.polar_gram();
        G = mat<C>(c, 2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                G.at(i, j) = Gq.at(i, j);
                G.at(n + i, n + j) = Gq.at(i, j);
            }
        Ginv = mat_inverse(c, G);
    }

    int n() const { return A->n; }
    const C& ctx() const { return A->ctx; }

    mat<C> alpha(const vec<C>& x) const {
        const C& c = ctx();
        int m = n();
        auto TR = mat_mul(c, A->Lmat(A->conj(x)), K);
        auto BL = mat_mul(c, K, A->Lmat(x));
        mat<C> M(c, 2 * m, 2 * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                M.at(i, m + j) = TR.at(i, j);
                M.at(m + i, j) = BL.at(i, j);
            }
        return M;
    }

    mat<C> sigma(const mat<C>& M) const {
        return mat_mul(ctx(), Ginv, mat_mul(ctx(), transpose(ctx(), M), G));
    }

    mat<C> block(const mat<C>& M, int bi, int bj) const {
        const C& c = ctx();
        int m = n();
        mat<C> B(c, m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) B.at(i, j) = M.at(bi * m + i, bj * m + j);
        return B;
    }

    bool block_zero(const mat<C>& M, int bi, int bj) const {
        const C& c = ctx();
        int m = n();
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (!c.is_zero(M.at(bi * m + i, bj * m + j))) return false;
        return true;
    }

    mat<C> assemble_even(const mat<C>& topleft, const mat<C>& bottomright) const {
        const C& c = ctx();
        int m = n();
        mat<C> M(c, 2 * m, 2 * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                M.at(i, j) = topleft.at(i, j);
                M.at(m + i, m + j) = bottomright.at(i, j);
            }
        return M;
    }
};

/// u = alpha(x) alpha(y); a spin element whenever q(x) q(y) = 1.
template <scalar_context C>
mat<C> spin_generator(const clifford_rep<C>& rep, const vec<C>& x, const vec<C>& y) {
    const C& c = rep.ctx();
    require(c.eq(c.mul(rep.A->q(x), rep.A->q(y)), c.one()),
            "spin generator needs q(x) q(y) = 1");
    return mat_mul(c, rep.alpha(x), rep.alpha(y));
}

template <scalar_context C>
bool is_spin(const clifford_rep<C>& rep, const mat<C>& u) {
    const C& c = rep.ctx();
    if (!rep.block_zero(u, 0, 1) || !rep.block_zero(u, 1, 0)) return false;
    if (!is_identity(c, mat_mul(c, u, rep.sigma(u)))) return false;
    // conjugation must keep every alpha(e_i) inside alpha(C)
    auto uinv = rep.sigma(u);
    for (int i = 0; i < rep.n(); ++i) {
        auto M = mat_mul(c, u, mat_mul(c, rep.alpha(rep.A->basis(i)), uinv));
        auto z = rep.A->conj(mat_vec(c, rep.block(M, 0, 1), rep.A->unit));
        if (!mat_eq(c, M, rep.alpha(z))) return false;
    }
    return true;
}

/// Read the triple off a spin element: u1 from the conjugation action on
/// alpha(C), u3 and u2 from the diagonal blocks. Throws when u is not spin.
template <scalar_context C>
triple<C> triple_from_spin(const clifford_rep<C>& rep, const mat<C>& u) {
    const C& c = rep.ctx();
    require(rep.block_zero(u, 0, 1) && rep.block_zero(u, 1, 0), "spin element must be even");
    auto uinv = rep.sigma(u);
    require(is_identity(c, mat_mul(c, u, uinv)), "u sigma(u) != I");
    std::vector<vec<C>> cols;
    for (int i = 0; i < rep.n(); ++i) {
        auto M = mat_mul(c, u, mat_mul(c, rep.alpha(rep.A->basis(i)), uinv));
        auto z = rep.A->conj(mat_vec(c, rep.block(M, 0, 1), rep.A->unit));
        require(mat_eq(c, M, rep.alpha(z)), "conjugation leaves alpha(C)");
        cols.push_back(z);
    }
    return {mat_from_columns(c, cols), rep.block(u, 1, 1), rep.block(u, 0, 0)};
}

/// diag(t3, t2); inverts triple_from_spin exactly on related triples.
template <scalar_context C>
mat<C> spin_from_triple(const clifford_rep<C>& rep, const triple<C>& t) {
    return rep.assemble_even(t.t3, t.t2);
}

} // namespace octiso
