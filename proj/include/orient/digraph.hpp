#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orient/error.hpp"

namespace orient {

// Unreachable pairs get a sentinel strictly larger than any finite distance,
// so max-aggregation over a distance matrix needs no special casing.
inline constexpr int kInfiniteDistance = std::numeric_limits<int>::max();

/// Dense directed graph over vertices 0..n-1 with adjacency kept as packed
/// 64-bit rows (both out-rows and in-rows), so BFS frontier expansion is
/// word-parallel. Loops and bidirectional pairs are rejected on insertion;
/// treat instances as immutable once built.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n)
        : n_(n), words_((n + 63) / 64), out_(size_t(n) * words_, 0),
          in_(size_t(n) * words_, 0) {
        if (n < 0)
            throw RangeError("Digraph: negative vertex count");
    }

    static Digraph from_oriented_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Digraph d(n);
        for (auto [u, v] : edges)
            d.add_arc(u, v);
        return d;
    }

    int size() const { return n_; }
    int words() const { return words_; }
    int arc_count() const { return arc_count_; }

    void add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw ValidationError("loop arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (has_arc(u, v))
            throw ValidationError("duplicate arc (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (has_arc(v, u))
            throw ValidationError("bidirectional pair (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ")");
        out_[size_t(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
        in_[size_t(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
        ++arc_count_;
    }

    bool has_arc(int u, int v) const {
        return (out_[size_t(u) * words_ + v / 64] >> (v % 64)) & 1;
    }

    const uint64_t* out_row(int u) const { return out_.data() + size_t(u) * words_; }
    const uint64_t* in_row(int v) const { return in_.data() + size_t(v) * words_; }

    std::vector<int> out_set(int u) const { return row_to_vertices(out_row(u)); }
    std::vector<int> in_set(int v) const { return row_to_vertices(in_row(v)); }

    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> a;
        a.reserve(size_t(arc_count_));
        for (int u = 0; u < n_; ++u)
            for (int v : out_set(u))
                a.emplace_back(u, v);
        return a;
    }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && out_ == o.out_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw ValidationError("vertex " + std::to_string(v) + " out of range [0, " +
                                  std::to_string(n_) + ")");
    }
    std::vector<int> row_to_vertices(const uint64_t* row) const {
        std::vector<int> vs;
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = row[w];
            while (bits) {
                vs.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return vs;
    }

    int n_ = 0;
    int words_ = 0;
    int arc_count_ = 0;
    std::vector<uint64_t> out_;
    std::vector<uint64_t> in_;
};

struct DistanceMatrix {
    int n = 0;
    std::vector<int> d; // row-major, kInfiniteDistance when unreachable

    explicit DistanceMatrix(int n_ = 0) : n(n_), d(size_t(n_) * n_, kInfiniteDistance) {}
    int at(int u, int v) const { return d[size_t(u) * n + v]; }
    int& at(int u, int v) { return d[size_t(u) * n + v]; }
};

/// BFS distances from a single source.
inline std::vector<int> distances_from(const Digraph& d, int s) {
    const int n = d.size(), W = d.words();
    std::vector<int> dist(n, kInfiniteDistance);
    if (n == 0)
        return dist;
    std::vector<uint64_t> reached(W, 0), frontier(W, 0), next(W, 0);
    reached[s / 64] = frontier[s / 64] = uint64_t(1) << (s % 64);
    dist[s] = 0;
    int depth = 0;
    for (;;) {
        std::fill(next.begin(), next.end(), 0);
        bool grew = false;
        for (int w = 0; w < W; ++w) {
            uint64_t bits = frontier[w];
            while (bits) {
                const int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const uint64_t* row = d.out_row(v);
                for (int x = 0; x < W; ++x)
                    next[x] |= row[x];
            }
        }
        ++depth;
        for (int w = 0; w < W; ++w) {
            next[w] &= ~reached[w];
            if (next[w]) {
                grew = true;
                reached[w] |= next[w];
                uint64_t bits = next[w];
                while (bits) {
                    dist[w * 64 + std::countr_zero(bits)] = depth;
                    bits &= bits - 1;
                }
            }
        }
        if (!grew)
            return dist;
        frontier.swap(next);
    }
}

inline DistanceMatrix all_pairs_distances(const Digraph& d) {
    DistanceMatrix m(d.size());
    for (int s = 0; s < d.size(); ++s) {
        std::vector<int> row = distances_from(d, s);
        std::copy(row.begin(), row.end(), m.d.begin() + size_t(s) * d.size());
    }
    return m;
}

struct DiameterReport {
    bool strong = false;
    int diameter = kInfiniteDistance;
    std::pair<int, int> witness{0, 0}; // lexicographically smallest pair attaining the max
    std::optional<DistanceMatrix> distances;
};

inline DiameterReport diameter_report(const Digraph& d, bool keep_matrix = false) {
    if (d.size() < 1)
        throw RangeError("diameter_report: need at least one vertex");
    DistanceMatrix m = all_pairs_distances(d);
    DiameterReport r;
    r.strong = true;
    r.diameter = 0;
    r.witness = {0, 0};
    for (int u = 0; u < m.n; ++u)
        for (int v = 0; v < m.n; ++v) {
            if (u == v)
                continue;
            const int x = m.at(u, v);
            if (x == kInfiniteDistance)
                r.strong = false;
            if (x > r.diameter) {
                r.diameter = x;
                r.witness = {u, v};
            }
        }
    if (keep_matrix)
        r.distances = std::move(m);
    return r;
}

/// max over u in U, v in V of the BFS distance from u to v.
inline int diam_between(const Digraph& d, const std::vector<int>& U, const std::vector<int>& V) {
    if (U.empty() || V.empty())
        throw RangeError("diam_between: empty vertex set");
    int best = 0;
    for (int u : U) {
        std::vector<int> dist = distances_from(d, u);
        for (int v : V)
            best = std::max(best, dist[v]);
    }
    return best;
}

inline Digraph reverse(const Digraph& d) {
    Digraph r(d.size());
    for (auto [u, v] : d.arcs())
        r.add_arc(v, u);
    return r;
}

/// (out-neighbors, in-neighbors) of v.
inline std::pair<std::vector<int>, std::vector<int>> neighbor_sets(const Digraph& d, int v) {
    if (v < 0 || v >= d.size())
        throw RangeError("neighbor_sets: vertex out of range");
    return {d.out_set(v), d.in_set(v)};
}

/// Subdigraph induced by `verts`; vertex i of the result is verts[i].
inline Digraph induced_subdigraph(const Digraph& d, const std::vector<int>& verts) {
    Digraph s(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = 0; j < verts.size(); ++j)
            if (i != j && d.has_arc(verts[i], verts[j]))
                s.add_arc(int(i), int(j));
    return s;
}

/// True iff the undirected graph is connected and has no bridge (a single
/// vertex counts). By Robbins' theorem this is exactly strong-orientability.
inline bool is_bridgeless_underlying(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 1)
        return true;
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge id)
    {
        std::vector<std::pair<int, int>> seen;
        seen.reserve(edges.size());
        for (int e = 0; e < int(edges.size()); ++e) {
            auto [u, v] = edges[e];
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ValidationError("edge endpoint out of range");
            if (u == v)
                throw ValidationError("loop edge (" + std::to_string(u) + ")");
            seen.emplace_back(std::min(u, v), std::max(u, v));
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw ValidationError("duplicate undirected edge");
    }

    // Iterative Tarjan: an edge is a bridge iff low[child] > disc[parent].
    std::vector<int> disc(n, -1), low(n, 0);
    struct Frame {
        int v;
        int parent_edge;
        size_t next;
    };
    std::vector<Frame> stack;
    int timer = 0, visited = 0;
    disc[0] = low[0] = timer++;
    ++visited;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next < adj[f.v].size()) {
            auto [w, eid] = adj[f.v][f.next++];
            if (eid == f.parent_edge)
                continue;
            if (disc[w] == -1) {
                disc[w] = low[w] = timer++;
                ++visited;
                stack.push_back({w, eid, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            const int v = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& p = stack.back();
                low[p.v] = std::min(low[p.v], low[v]);
                if (low[v] > disc[p.v])
                    return false; // bridge between p.v and v
            }
        }
    }
    return visited == n;
}

} // namespace orient
