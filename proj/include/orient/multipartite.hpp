#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "orient/digraph.hpp"
#include "orient/error.hpp"

namespace orient {

/// Part sizes and the contiguous vertex ranges of a complete multipartite
/// graph. Part i occupies [offsets[i], offsets[i] + part_sizes[i]); for
/// tripartite K(3,p,q) use, part 0 holds the three x-vertices at 0,1,2.
struct PartLayout {
    std::vector<int> part_sizes;
    std::vector<int> offsets;

    int parts() const { return int(part_sizes.size()); }
    int total() const { return offsets.empty() ? 0 : offsets.back() + part_sizes.back(); }
    int vertex(int part, int idx) const { return offsets[part] + idx; }
    int part_of(int v) const {
        for (int i = parts() - 1; i >= 0; --i)
            if (v >= offsets[i])
                return i;
        return 0;
    }
    std::vector<int> part_vertices(int part) const {
        std::vector<int> vs(part_sizes[part]);
        std::iota(vs.begin(), vs.end(), offsets[part]);
        return vs;
    }
};

inline PartLayout layout(const std::vector<int>& part_sizes) {
    if (part_sizes.empty())
        throw RangeError("layout: empty part list");
    PartLayout L;
    L.part_sizes = part_sizes;
    L.offsets.resize(part_sizes.size());
    int acc = 0;
    for (size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] < 1)
            throw RangeError("layout: part size must be >= 1, got " +
                             std::to_string(part_sizes[i]));
        L.offsets[i] = acc;
        acc += part_sizes[i];
    }
    return L;
}

/// All cross-part pairs (u, v) with u < v; count is sum over i<j of p_i * p_j.
inline std::vector<std::pair<int, int>> edges(const PartLayout& L) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < L.parts(); ++i)
        for (int j = i + 1; j < L.parts(); ++j)
            for (int a = 0; a < L.part_sizes[i]; ++a)
                for (int b = 0; b < L.part_sizes[j]; ++b)
                    es.emplace_back(L.vertex(i, a), L.vertex(j, b));
    return es;
}

struct EdgeSetDiff {
    std::vector<std::pair<int, int>> missing; // cross-part pairs with no arc
    std::vector<std::pair<int, int>> extra;   // intra-part arcs
    bool clean() const { return missing.empty() && extra.empty(); }
};

inline EdgeSetDiff multipartite_orientation_diff(const Digraph& d, const PartLayout& L) {
    EdgeSetDiff diff;
    if (d.size() != L.total())
        throw ValidationError("digraph has " + std::to_string(d.size()) +
                              " vertices, layout expects " + std::to_string(L.total()));
    for (int u = 0; u < d.size(); ++u)
        for (int v = u + 1; v < d.size(); ++v) {
            const bool cross = L.part_of(u) != L.part_of(v);
            const bool fwd = d.has_arc(u, v), bwd = d.has_arc(v, u);
            if (cross && !fwd && !bwd)
                diff.missing.emplace_back(u, v);
            if (!cross && (fwd || bwd))
                diff.extra.emplace_back(fwd ? u : v, fwd ? v : u);
        }
    return diff;
}

/// True iff every cross-part pair carries exactly one arc and no intra-part
/// arc exists. (One direction per pair is already a Digraph invariant.)
inline bool is_complete_multipartite_orientation(const Digraph& d, const PartLayout& L) {
    return d.size() == L.total() && multipartite_orientation_diff(d, L).clean();
}

} // namespace orient
