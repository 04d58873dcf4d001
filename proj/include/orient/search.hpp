#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "orient/binomial.hpp"
#include "orient/digraph.hpp"
#include "orient/error.hpp"
#include "orient/multipartite.hpp"

namespace orient {

struct SearchResult {
    enum class Method { FullEnum, Backtrack };
    std::optional<int> f;           // empty: no strong orientation exists
    std::optional<Digraph> witness; // some orientation attaining f
    uint64_t examined = 0;
    Method method = Method::FullEnum;
};

namespace detail {

// Orientation mask convention: edge e = (u,v) with u < v runs u -> v when bit
// e is clear, v -> u when set.
inline void build_out_masks(const std::vector<std::pair<int, int>>& es, uint64_t mask,
                            uint32_t* out, int n) {
    std::fill(out, out + n, 0u);
    for (size_t e = 0; e < es.size(); ++e) {
        auto [u, v] = es[e];
        if (mask >> e & 1)
            out[v] |= uint32_t(1) << u;
        else
            out[u] |= uint32_t(1) << v;
    }
}

// Diameter of a <=32-vertex digraph, capped: returns cap as soon as the
// diameter provably reaches it (including the non-strong case).
inline int diameter_capped(const uint32_t* out, int n, int cap) {
    const uint32_t full = n == 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
    int worst = 0;
    for (int s = 0; s < n; ++s) {
        uint32_t reached = uint32_t(1) << s, frontier = reached;
        int depth = 0;
        while (reached != full) {
            if (depth >= cap)
                return cap;
            uint32_t next = 0, f = frontier;
            while (f) {
                next |= out[std::countr_zero(f)];
                f &= f - 1;
            }
            next &= ~reached;
            if (!next)
                return cap;
            ++depth;
            reached |= next;
            frontier = next;
        }
        if (depth >= cap)
            return cap;
        worst = std::max(worst, depth);
    }
    return worst;
}

inline Digraph digraph_from_mask(int n, const std::vector<std::pair<int, int>>& es,
                                 uint64_t mask) {
    Digraph d(n);
    for (size_t e = 0; e < es.size(); ++e) {
        auto [u, v] = es[e];
        if (mask >> e & 1)
            d.add_arc(v, u);
        else
            d.add_arc(u, v);
    }
    return d;
}

} // namespace detail

/// Exact minimum diameter over all orientations of a complete multipartite
/// graph with at most `edge_budget` edges, by full enumeration. The first
/// edge's direction is fixed (reversal preserves the diameter), halving the
/// space; `examined` counts the canonical half actually scanned. With
/// several threads the f value is still deterministic, the witness merely
/// "some" optimal orientation.
inline SearchResult f_bruteforce(const std::vector<int>& parts, int edge_budget = 24,
                                 int threads = 1) {
    const PartLayout L = layout(parts);
    const std::vector<std::pair<int, int>> es = edges(L);
    const int n = L.total();
    const int m = int(es.size());
    if (m > edge_budget)
        throw RangeError("f_bruteforce: " + std::to_string(m) + " edges exceed the budget of " +
                         std::to_string(edge_budget) +
                         "; use exists_diam2_backtracking for a diameter-2 decision");

    SearchResult res;
    res.method = SearchResult::Method::FullEnum;
    if (n == 1) {
        res.f = 0;
        res.witness = Digraph(1);
        res.examined = 1;
        return res;
    }
    if (!is_bridgeless_underlying(n, es))
        return res; // Robbins: no strong orientation at all

    const uint64_t space = uint64_t(1) << (m - 1); // first edge fixed forward
    const int n_threads = std::max(1, std::min<int>(threads, 64));
    std::atomic<int> best{kInfiniteDistance};
    std::atomic<uint64_t> examined{0};
    std::mutex mu;
    uint64_t best_mask = 0;

    auto scan = [&](uint64_t lo, uint64_t hi) {
        std::vector<uint32_t> out(n);
        int local_best = best.load(std::memory_order_relaxed);
        uint64_t count = 0;
        for (uint64_t x = lo; x < hi; ++x) {
            if ((count & 0x3FF) == 0) {
                local_best = best.load(std::memory_order_relaxed);
                if (local_best <= 2)
                    break; // 2 is a hard floor for n >= 2
            }
            ++count;
            const uint64_t mask = x << 1;
            detail::build_out_masks(es, mask, out.data(), n);
            const int dia = detail::diameter_capped(out.data(), n, local_best);
            if (dia < local_best) {
                std::lock_guard<std::mutex> lk(mu);
                if (dia < best.load(std::memory_order_relaxed)) {
                    best.store(dia, std::memory_order_relaxed);
                    best_mask = mask;
                }
                local_best = best.load(std::memory_order_relaxed);
            }
        }
        examined += count;
    };

    if (n_threads == 1 || space < 1024) {
        scan(0, space);
    } else {
        std::vector<std::thread> pool;
        const uint64_t chunk = (space + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(scan, t * chunk, std::min<uint64_t>(space, (t + 1) * chunk));
        for (auto& th : pool)
            th.join();
    }

    res.examined = examined.load();
    const int f = best.load();
    if (f == kInfiniteDistance)
        throw std::logic_error("f_bruteforce: bridgeless graph with no strong orientation");
    res.f = f;
    res.witness = detail::digraph_from_mask(n, es, best_mask);
    return res;
}

struct Diam2Result {
    bool exists = false;
    std::optional<Digraph> witness;
    uint64_t nodes = 0; // search-tree nodes visited
};

namespace detail {

class Diam2Search {
public:
    Diam2Search(const PartLayout& L) : L_(L), n_(L.total()) {
        adj_.assign(n_, 0);
        for (auto [u, v] : edges(L)) {
            adj_[u] |= uint32_t(1) << v;
            adj_[v] |= uint32_t(1) << u;
        }
        out_.assign(n_, 0);
        in_.assign(n_, 0);
        undec_ = adj_;
        for (int u = 1; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (adj_[u] >> v & 1)
                    order_.emplace_back(u, v);
    }

    // Enumerates vertex 0's out-degree pattern per part up to the two cheap
    // symmetries (permuting within parts; reversing all arcs), then
    // backtracks over the remaining edges.
    bool run() {
        const int t = L_.parts();
        std::vector<int> deg(t, 0);
        return run_tuple(deg, 1);
    }

    Digraph witness() const {
        Digraph d(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (out_[u] >> v & 1)
                    d.add_arc(u, v);
        return d;
    }

    uint64_t nodes = 0;

private:
    bool run_tuple(std::vector<int>& deg, int part) {
        if (part == L_.parts()) {
            // reversal canonicalization: keep tuples <= their complement
            for (int j = 1; j < L_.parts(); ++j) {
                const int c = L_.part_sizes[j] - deg[j];
                if (deg[j] < c)
                    break;
                if (deg[j] > c)
                    return false;
            }
            return try_root(deg);
        }
        for (int d = 0; d <= L_.part_sizes[part]; ++d) {
            deg[part] = d;
            if (run_tuple(deg, part + 1))
                return true;
        }
        return false;
    }

    bool try_root(const std::vector<int>& deg) {
        const auto out0 = out_, in0 = in_, undec0 = undec_;
        for (int j = 1; j < L_.parts(); ++j)
            for (int i = 0; i < L_.part_sizes[j]; ++i) {
                const int v = L_.vertex(j, i);
                if (i < deg[j])
                    set_arc(0, v);
                else
                    set_arc(v, 0);
            }
        const bool ok = feasible() && dfs(0);
        if (!ok) {
            out_ = out0;
            in_ = in0;
            undec_ = undec0;
        }
        return ok;
    }

    bool dfs(size_t idx) {
        ++nodes;
        if (idx == order_.size())
            return true; // no undecided edges left, so feasible() was exact
        auto [u, v] = order_[idx];
        for (int dir = 0; dir < 2; ++dir) {
            const int a = dir ? v : u, b = dir ? u : v;
            set_arc(a, b);
            if (feasible() && dfs(idx + 1))
                return true;
            unset_arc(a, b);
        }
        return false;
    }

    void set_arc(int a, int b) {
        out_[a] |= uint32_t(1) << b;
        in_[b] |= uint32_t(1) << a;
        undec_[a] &= ~(uint32_t(1) << b);
        undec_[b] &= ~(uint32_t(1) << a);
    }
    void unset_arc(int a, int b) {
        out_[a] &= ~(uint32_t(1) << b);
        in_[b] &= ~(uint32_t(1) << a);
        undec_[a] |= uint32_t(1) << b;
        undec_[b] |= uint32_t(1) << a;
    }

    // A pair (u,v) is abandoned once neither the direct arc nor any 2-path
    // can still be realized; then some distance would exceed 2 in every
    // completion.
    bool feasible() const {
        for (int u = 0; u < n_; ++u) {
            const uint32_t from_u = out_[u] | undec_[u];
            for (int v = 0; v < n_; ++v) {
                if (u == v || (out_[u] >> v & 1) || (undec_[u] >> v & 1))
                    continue;
                if (!(from_u & (in_[v] | undec_[v])))
                    return false;
            }
        }
        return true;
    }

    PartLayout L_;
    int n_;
    std::vector<uint32_t> adj_, out_, in_, undec_;
    std::vector<std::pair<int, int>> order_;
};

} // namespace detail

/// Decides whether some orientation of the complete multipartite graph has
/// diameter <= 2, by depth-first search over edge orientations with
/// infeasible-pair pruning. The answer is independent of exploration order.
inline Diam2Result exists_diam2_backtracking(const std::vector<int>& parts,
                                             int max_vertices = 16) {
    const PartLayout L = layout(parts);
    if (L.total() > max_vertices)
        throw RangeError("exists_diam2_backtracking: " + std::to_string(L.total()) +
                         " vertices exceed the limit of " + std::to_string(max_vertices));
    if (L.total() < 2)
        return {true, Digraph(L.total()), 1};
    detail::Diam2Search s(L);
    Diam2Result r;
    r.exists = s.run();
    r.nodes = s.nodes;
    if (r.exists)
        r.witness = s.witness();
    return r;
}

struct SpernerResult {
    int n = 0;
    int max_size = 0;
    std::vector<std::vector<uint32_t>> maximum_antichains; // subsets as bitmasks
    uint64_t antichain_count = 0;                          // total families enumerated
};

/// Enumerates every collection of pairwise independent subsets of [n]
/// (A \ B and B \ A both nonempty for each distinct pair), reporting the
/// maximum size and all collections attaining it.
inline SpernerResult sperner_check(int n) {
    if (n < 1 || n > 5)
        throw RangeError("sperner_check: n must be in 1..5");
    const uint32_t total = uint32_t(1) << n;
    SpernerResult res;
    res.n = n;
    std::vector<uint32_t> chosen;

    auto independent = [](uint32_t a, uint32_t b) { return (a & ~b) && (b & ~a); };
    auto rec = [&](auto&& self, uint32_t start) -> void {
        ++res.antichain_count;
        if (int(chosen.size()) > res.max_size) {
            res.max_size = int(chosen.size());
            res.maximum_antichains.clear();
        }
        if (int(chosen.size()) == res.max_size)
            res.maximum_antichains.push_back(chosen);
        for (uint32_t s = start; s < total; ++s) {
            bool ok = true;
            for (uint32_t t : chosen)
                if (!independent(s, t)) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            chosen.push_back(s);
            self(self, s + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return res;
}

/// True iff EVERY orientation of K(p,q) has two vertices of the q-side at
/// distance >= 4 (unreachable counts). Scans all 2^(pq) orientations; only
/// applicable when q exceeds C(p, floor(p/2)).
inline bool lemma22_check(int p, int q) {
    if (p < 2 || q < p)
        throw RangeError("lemma22_check: need 2 <= p <= q");
    if (BigInt(q) <= central_binom(p))
        throw RangeError("lemma22_check: hypothesis needs q > C(p, floor(p/2)) = " +
                         central_binom(p).str());
    if (p * q > 24)
        throw RangeError("lemma22_check: " + std::to_string(p * q) +
                         " edges exceed the enumeration budget of 24");

    const PartLayout L = layout({p, q});
    const std::vector<std::pair<int, int>> es = edges(L);
    const int n = p + q;
    std::vector<uint32_t> out(n);
    const uint64_t space = uint64_t(1) << es.size();
    for (uint64_t mask = 0; mask < space; ++mask) {
        detail::build_out_masks(es, mask, out.data(), n);
        bool far_pair = false;
        for (int a = 0; a < q && !far_pair; ++a) {
            const int z = p + a;
            uint32_t reach = out[z]; // within 1 step
            for (int step = 0; step < 2; ++step) {
                uint32_t next = 0, f = reach;
                while (f) {
                    next |= out[std::countr_zero(f)];
                    f &= f - 1;
                }
                reach |= next;
            }
            for (int b = 0; b < q; ++b)
                if (b != a && !(reach >> (p + b) & 1)) {
                    far_pair = true; // distance(z, w) >= 4
                    break;
                }
        }
        if (!far_pair)
            return false; // this orientation keeps the whole q-side within 3
    }
    return true;
}

} // namespace orient
