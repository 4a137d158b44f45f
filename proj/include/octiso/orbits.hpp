/** @file orbits.hpp
 *  Finite-field enumeration: the norm-one sphere, counting by convolution of
 *  hyperbolic planes, and the orbit of the pair action
 *      t . (u, v) = (t3 u, t2 v)
 *  of generated related triples on sphere pairs, with witness words.
 *
 *  Everything here runs on fq_ctx (raw table arithmetic); the pair states and
 *  permutation tables stay integer-indexed so the breadth-first search touches
 *  no scalar boxing.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>

#include "octiso/random.hpp"
#include "octiso/triality.hpp"

namespace octiso {

/// All norm-one points of an algebra over F_q, with O(1) reverse lookup.
struct sphere_index {
    unsigned long q = 0;
    int n = 0;
    std::vector<vec<fq_ctx>> points;
    std::vector<std::int32_t> lookup; // code -> index, -1 when off the sphere

    std::uint64_t code_of(const vec<fq_ctx>& x) const {
        std::uint64_t code = 0;
        for (int i = n - 1; i >= 0; --i) code = code * q + x[std::size_t(i)];
        return code;
    }

    std::int32_t find(const vec<fq_ctx>& x) const {
        return lookup[std::size_t(code_of(x))];
    }
};

inline sphere_index enumerate_sphere(const algebra<fq_ctx>& A) {
    const fq_ctx& c = A.ctx;
    sphere_index S;
    S.q = c.q;
    S.n = A.n;
    std::uint64_t total = 1;
    for (int i = 0; i < A.n; ++i) {
        total *= S.q;
        require(total <= (1u << 23), "sphere enumeration bound exceeded for this field size");
    }
    S.lookup.assign(std::size_t(total), -1);
    vec<fq_ctx> x(std::size_t(A.n), 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t t = code;
        for (int i = 0; i < A.n; ++i) {
            x[std::size_t(i)] = std::uint16_t(t % S.q);
            t /= S.q;
        }
        if (A.q(x) == c.one()) {
            S.lookup[std::size_t(code)] = std::int32_t(S.points.size());
            S.points.push_back(x);
        }
    }
    if (A.n == 8 && A.name == "zorn") {
        // q^3 (q^4 - 1)
        mpz_class q(static_cast<unsigned long>(S.q));
        mpz_class expect = q * q * q * (q * q * q * q - 1);
        require(mpz_class(static_cast<unsigned long>(S.points.size())) == expect,
                "sphere count does not match q^3 (q^4 - 1)");
    }
    return S;
}

/// Count representations of 1 by the split form (4 hyperbolic planes) over F_q
/// by convolving per-plane counts; independent of the enumeration path.
inline mpz_class split_sphere_count(const fq_ctx& c, int planes = 4) {
    unsigned long q = c.q;
    // per-plane distribution of xy - wz... the plane is a single product term:
    // the split form is x0 x1 - x2 x5 - x3 x6 - x4 x7, each summand a product of
    // two independent coordinates up to sign, and sign does not change counts.
    std::vector<mpz_class> plane(q, 0);
    for (unsigned long a = 0; a < q; ++a)
        for (unsigned long b = 0; b < q; ++b)
            plane[c.mul(std::uint16_t(a), std::uint16_t(b))] += 1;
    std::vector<mpz_class> dist(q, 0);
    dist[0] = 1;
    for (int k = 0; k < planes; ++k) {
        std::vector<mpz_class> next(q, 0);
        for (unsigned long s = 0; s < q; ++s) {
            if (dist[s] == 0) continue;
            for (unsigned long v = 0; v < q; ++v)
                next[c.add(std::uint16_t(s), std::uint16_t(v))] += dist[s] * plane[v];
        }
        dist = std::move(next);
    }
    return dist[1];
}

// ---- pair orbit of generated triples ----

struct pair_orbit {
    const sphere_index* sphere = nullptr;
    std::vector<triple<fq_ctx>> generators;
    std::vector<std::vector<std::int32_t>> act3, act2; // generator -> point permutation
    std::int64_t start = -1;
    std::vector<std::int32_t> parent_state; // -2 unvisited, -1 root
    std::vector<std::int16_t> parent_gen;
    std::int64_t size = 0;

    std::int64_t state_of(std::int32_t i, std::int32_t j) const {
        return std::int64_t(i) * std::int64_t(sphere->points.size()) + j;
    }
};

/// Basic triples of the given sphere points plus both rotations of each.
inline std::vector<triple<fq_ctx>> rotation_closed_generators(const algebra<fq_ctx>& A,
                                                              const sphere_index& S,
                                                              std::size_t max_points = 0) {
    std::vector<triple<fq_ctx>> gens;
    std::size_t count = max_points == 0 ? S.points.size() : std::min(max_points, S.points.size());
    gens.reserve(count * 3);
    for (std::size_t i = 0; i < count; ++i) {
        auto t = basic_triple(A, S.points[i]);
        gens.push_back(rotate(t));
        gens.push_back(rotate(gens.back()));
        gens.push_back(t); // order: r(t), r2(t), t; t last keeps index arithmetic simple
    }
    return gens;
}

inline pair_orbit orbit_of_pair(const algebra<fq_ctx>& A, const sphere_index& S,
                                std::vector<triple<fq_ctx>> gens, const vec<fq_ctx>& start_u,
                                const vec<fq_ctx>& start_v) {
    const fq_ctx& c = A.ctx;
    pair_orbit O;
    O.sphere = &S;
    O.generators = std::move(gens);
    std::size_t N = S.points.size(), G = O.generators.size();
    require(N * N <= (std::size_t(1) << 24), "pair-count ceiling exceeded");
    require(G * N <= (std::size_t(1) << 24), "permutation-table ceiling exceeded");
    O.act3.assign(G, std::vector<std::int32_t>(N));
    O.act2.assign(G, std::vector<std::int32_t>(N));
    for (std::size_t g = 0; g < G; ++g)
        for (std::size_t i = 0; i < N; ++i) {
            auto im3 = mat_vec(c, O.generators[g].t3, S.points[i]);
            auto im2 = mat_vec(c, O.generators[g].t2, S.points[i]);
            O.act3[g][i] = S.find(im3);
            O.act2[g][i] = S.find(im2);
            require(O.act3[g][i] >= 0 && O.act2[g][i] >= 0,
                    "triple component does not preserve the sphere");
        }
    auto u0 = S.find(start_u), v0 = S.find(start_v);
    require(u0 >= 0 && v0 >= 0, "start pair is off the sphere");
    O.start = O.state_of(u0, v0);
    O.parent_state.assign(N * N, -2);
    O.parent_gen.assign(N * N, -1);
    O.parent_state[std::size_t(O.start)] = -1;
    std::deque<std::int64_t> frontier{O.start};
    O.size = 1;
    while (!frontier.empty()) {
        auto s = frontier.front();
        frontier.pop_front();
        auto i = std::int32_t(s / std::int64_t(N)), j = std::int32_t(s % std::int64_t(N));
        for (std::size_t g = 0; g < G; ++g) {
            auto ns = O.state_of(O.act3[g][std::size_t(i)], O.act2[g][std::size_t(j)]);
            if (O.parent_state[std::size_t(ns)] != -2) continue;
            O.parent_state[std::size_t(ns)] = std::int32_t(s);
            O.parent_gen[std::size_t(ns)] = std::int16_t(g);
            ++O.size;
            frontier.push_back(ns);
        }
    }
    return O;
}

inline pair_orbit orbit_of_unit_pair(const algebra<fq_ctx>& A, const sphere_index& S,
                                     std::vector<triple<fq_ctx>> gens) {
    return orbit_of_pair(A, S, std::move(gens), A.unit, A.unit);
}

/// Generator indices applied in order (first applied first) taking the start
/// pair to the given state; empty when the state is the start.
inline std::vector<int> witness_word(const pair_orbit& O, std::int64_t state) {
    require(state >= 0 && std::size_t(state) < O.parent_state.size() &&
                O.parent_state[std::size_t(state)] != -2,
            "state not reached by the orbit walk");
    std::vector<int> word;
    while (O.parent_state[std::size_t(state)] != -1) {
        word.push_back(O.parent_gen[std::size_t(state)]);
        state = O.parent_state[std::size_t(state)];
    }
    std::reverse(word.begin(), word.end());
    return word;
}

inline triple<fq_ctx> triple_for_word(const algebra<fq_ctx>& A,
                                      const std::vector<triple<fq_ctx>>& gens,
                                      const std::vector<int>& word) {
    auto T = triple_identity(A);
    for (int g : word) T = triple_mul(A.ctx, gens[std::size_t(g)], T);
    return T;
}

struct orbit_witness {
    std::vector<int> word;
    triple<fq_ctx> t; // related triple with pi(t) = (a, b)
};

/// A related triple whose pi is exactly (a, b), produced from the walk; its t1
/// is then an isomorphism C -> C^{a,b}.
inline orbit_witness isotope_witness_via_orbit(const algebra<fq_ctx>& A, const pair_orbit& O,
                                               const vec<fq_ctx>& a, const vec<fq_ctx>& b) {
    const auto& S = *O.sphere;
    auto ia = S.find(a), ib = S.find(b);
    require(ia >= 0 && ib >= 0, "pair is not on the sphere");
    auto word = witness_word(O, O.state_of(ia, ib));
    auto T = triple_for_word(A, O.generators, word);
    auto p = pi(A, T);
    require(vec_eq(A.ctx, p.first, a) && vec_eq(A.ctx, p.second, b),
            "orbit word does not reproduce the pair");
    return {std::move(word), std::move(T)};
}

} // namespace octiso
