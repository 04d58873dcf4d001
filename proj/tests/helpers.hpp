#pragma once

#include <random>
#include <vector>

#include "orient/digraph.hpp"
#include "orient/multipartite.hpp"

namespace orient::test {

// Random orientation of the complete multipartite graph on `parts`.
inline Digraph random_orientation(const std::vector<int>& parts, std::mt19937& rng) {
    const PartLayout L = layout(parts);
    Digraph d(L.total());
    for (auto [u, v] : edges(L)) {
        if (rng() & 1)
            d.add_arc(u, v);
        else
            d.add_arc(v, u);
    }
    return d;
}

// Random digraph where each unordered pair gets u->v, v->u, or no arc.
inline Digraph random_digraph(int n, std::mt19937& rng) {
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            switch (rng() % 3) {
            case 0: d.add_arc(u, v); break;
            case 1: d.add_arc(v, u); break;
            default: break;
            }
    return d;
}

// Copy of d with the arc between u and v flipped.
inline Digraph with_flipped_arc(const Digraph& d, int u, int v) {
    Digraph r(d.size());
    for (auto [a, b] : d.arcs()) {
        if ((a == u && b == v) || (a == v && b == u))
            r.add_arc(b, a);
        else
            r.add_arc(a, b);
    }
    return r;
}

} // namespace orient::test
