// Zigzag costs, sandwich bounds for the path metric, and a restricted
// path-metric oracle over a finite pool of complexes.
//
// The true path metric is an infimum over all zigzags in the bounded
// derived category and is not computable in general.  The oracle explores
// the weighted graph on a declared pool (plus the zero object), where an
// edge is a genuine chain morphism and its weight is the integrated weight
// of its cone, so every path realizes an actual zigzag and the result is a
// certified upper bound; it is the exact distance whenever it meets the
// lower bound of the sandwich.
#pragma once

#include <vector>

#include "triwass/weights.hpp"

namespace triwass {

struct Bounds {
    Rational lower, upper;
};

// lower = integral of |w(a) - w(b)|, upper = integral of (w(a) + w(b)).
inline Bounds bounds(const RepComplex& a, const RepComplex& b, const WeightFamily& fam) {
    if (!same_quiver(a.quiver, b.quiver)) throw input_error("bounds: quiver mismatch");
    WeightVector va = weight_vector(a, fam), vb = weight_vector(b, fam);
    const AnQuiver& q = *a.quiver;
    Rational lo(0), hi(0);
    for (int p = 0; p < q.n; ++p) {
        lo += q.measure[p] * rat_abs(va[p] - vb[p]);
        hi += q.measure[p] * (va[p] + vb[p]);
    }
    return {lo, hi};
}

// One leg of a zigzag; forward legs point away from the left endpoint.
struct ZigzagLeg {
    ChainMorphism map;
    bool forward = true;

    const RepComplex& left() const { return forward ? map.source : map.target; }
    const RepComplex& right() const { return forward ? map.target : map.source; }
};

struct Zigzag {
    std::vector<ZigzagLeg> legs;

    const RepComplex& start() const { return legs.front().left(); }
    const RepComplex& end() const { return legs.back().right(); }
};

inline Zigzag make_zigzag(std::vector<ZigzagLeg> legs) {
    if (legs.empty()) throw input_error("zigzag: needs at least one leg");
    for (std::size_t k = 0; k + 1 < legs.size(); ++k) {
        if (legs[k].right() != legs[k + 1].left())
            throw input_error("zigzag: legs " + std::to_string(k) + " and " +
                              std::to_string(k + 1) + " do not share an object");
        if (legs[k].forward == legs[k + 1].forward)
            throw input_error("zigzag: directions must alternate");
    }
    return {std::move(legs)};
}

// cost(gamma) = sum of the integrated cone weights of the legs.
inline Rational zigzag_cost(const Zigzag& z, const WeightFamily& fam) {
    Rational acc(0);
    for (const ZigzagLeg& leg : z.legs) acc += integrated_weight(cone(leg.map), fam);
    return acc;
}

// Shortest path between a and b over pool + {0}, at most max_len legs.
inline ExtRational restricted_path_metric(const RepComplex& a, const RepComplex& b,
                                          const WeightFamily& fam,
                                          const std::vector<RepComplex>& pool, int max_len) {
    if (max_len < 1) throw input_error("path metric: max_len must be >= 1");
    std::vector<const RepComplex*> nodes;
    RepComplex zero = zero_complex(a.quiver, a.mod);
    nodes.push_back(&zero);
    int ia = -1, ib = -1;
    for (const RepComplex& c : pool) {
        if (!same_quiver(c.quiver, a.quiver)) throw input_error("path metric: quiver mismatch");
        nodes.push_back(&c);
        if (ia < 0 && c == a) ia = int(nodes.size()) - 1;
        if (ib < 0 && c == b) ib = int(nodes.size()) - 1;
    }
    if (ia < 0 || ib < 0) throw input_error("path metric: endpoints must be in the pool");

    const int N = int(nodes.size());
    // Edge weight = weight of the cone of a morphism between the nodes; the
    // zero morphism gives cone(0: u -> v) = v + u[1].
    std::vector<std::vector<Rational>> w(N, std::vector<Rational>(N, Rational(0)));
    for (int u = 0; u < N; ++u)
        for (int v = u + 1; v < N; ++v) {
            Rational cw =
                integrated_weight(cone(zero_chain_morphism(*nodes[u], *nodes[v])), fam);
            w[u][v] = cw;
            w[v][u] = cw;
        }

    std::vector<ExtRational> dist(N, ExtRational::infinity());
    dist[ia] = ExtRational(Rational(0));
    for (int step = 0; step < max_len; ++step) {
        std::vector<ExtRational> next = dist;
        for (int u = 0; u < N; ++u) {
            if (dist[u].is_infinite()) continue;
            for (int v = 0; v < N; ++v) {
                ExtRational cand = dist[u] + ExtRational(w[u][v]);
                if (cand < next[v]) next[v] = cand;
            }
        }
        dist = std::move(next);
    }
    return dist[ib];
}

}  // namespace triwass
