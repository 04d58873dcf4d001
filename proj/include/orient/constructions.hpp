#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orient/binomial.hpp"
#include "orient/digraph.hpp"
#include "orient/error.hpp"
#include "orient/multipartite.hpp"

namespace orient {

enum class ConstructionKind {
    BipartiteLambda,
    Odd,
    Even,
    Singleton55,
    Singleton55Plus,
    Singleton55Minus,
    Singleton55Both,
    NearBipartite57,
};

inline const char* kind_name(ConstructionKind k) {
    switch (k) {
    case ConstructionKind::BipartiteLambda: return "BIPARTITE_LAMBDA";
    case ConstructionKind::Odd: return "ODD";
    case ConstructionKind::Even: return "EVEN";
    case ConstructionKind::Singleton55: return "SINGLETON_55";
    case ConstructionKind::Singleton55Plus: return "SINGLETON_55_PLUS";
    case ConstructionKind::Singleton55Minus: return "SINGLETON_55_MINUS";
    case ConstructionKind::Singleton55Both: return "SINGLETON_55_BOTH";
    case ConstructionKind::NearBipartite57: return "NEAR_BIPARTITE_57";
    }
    return "?";
}

/// Construction identifier plus every resolved free parameter, enough to
/// rebuild the digraph bit-for-bit.
struct ConstructionPlan {
    ConstructionKind kind = ConstructionKind::BipartiteLambda;
    int p = 0;
    int q = 0;
    std::optional<int> lambda;
    std::optional<std::pair<int, int>> q_split;
    // Cyclic positions of the distinguished middle-part block (the block the
    // embedded orientations must avoid as an out-set); chosen non-contiguous.
    std::vector<int> v2_distinguished;
    std::vector<std::vector<int>> forbidden_out_sets;
};

struct Constructed {
    ConstructionPlan plan;
    Digraph digraph;
};

namespace detail {

inline constexpr int kMaxHostSide = 30; // out-sets are kept as uint32_t masks

inline uint32_t cyclic_window_mask(int start, int width, int p) {
    uint32_t m = 0;
    for (int s = 0; s < width; ++s)
        m |= uint32_t(1) << ((start + s) % p);
    return m;
}

inline bool is_cyclic_window(uint32_t mask, int p) {
    const int width = std::popcount(mask);
    if (width == 0 || width >= p)
        return false;
    for (int i = 0; i < p; ++i)
        if (mask == cyclic_window_mask(i, width, p))
            return true;
    return false;
}

// Gosper's hack: next mask with the same popcount, ascending numeric order
// (numeric order on equal-size masks is exactly colexicographic order).
inline uint32_t next_same_popcount(uint32_t v) {
    const uint32_t c = v & -v;
    const uint32_t r = v + c;
    return (((r ^ v) >> 2) / c) | r;
}

inline long long clamp_to(const BigInt& v, long long hi) {
    return v >= hi ? hi : v.convert_to<long long>();
}

} // namespace detail

/// One out-neighborhood mask per guest vertex of a width-lambda bipartite
/// orientation: the p cyclic windows first (guest i gets the window starting
/// at host i), then further lambda-subsets in colexicographic order, skipping
/// windows and forbidden sets.
inline std::vector<uint32_t> lambda_out_masks(int p, int q, int lambda,
                                              const std::vector<uint32_t>& forbidden = {}) {
    if (p < 2 || p > detail::kMaxHostSide)
        throw RangeError("lambda orientation: host side must have 2.." +
                         std::to_string(detail::kMaxHostSide) + " vertices, got " +
                         std::to_string(p));
    if (lambda < 1 || lambda > p - 1)
        throw RangeError("lambda orientation: need 1 <= lambda <= p-1, got lambda=" +
                         std::to_string(lambda));
    if (q < p)
        throw RangeError("lambda orientation: need q >= p so all windows are present");

    std::vector<uint32_t> windows(p);
    for (int i = 0; i < p; ++i)
        windows[i] = detail::cyclic_window_mask(i, lambda, p);

    std::vector<uint32_t> forb;
    for (uint32_t f : forbidden) {
        if (std::popcount(f) != lambda)
            continue; // cannot collide with any width-lambda out-set
        for (int i = 0; i < p; ++i)
            if (f == windows[i])
                throw RangeError("forbidden out-set equals cyclic window " + std::to_string(i));
        if (std::find(forb.begin(), forb.end(), f) == forb.end())
            forb.push_back(f);
    }

    const BigInt available = binom(p, lambda) - BigInt(forb.size());
    if (BigInt(q) > available)
        throw RangeError("lambda orientation: q=" + std::to_string(q) + " exceeds the " +
                         available.str() + " distinct usable " + std::to_string(lambda) +
                         "-subsets of a " + std::to_string(p) + "-set");

    std::vector<uint32_t> masks = windows;
    masks.reserve(q);
    const uint32_t limit = uint32_t(1) << p;
    for (uint32_t m = (uint32_t(1) << lambda) - 1; int(masks.size()) < q;
         m = detail::next_same_popcount(m)) {
        if (m >= limit)
            throw RangeError("lambda orientation: subset supply exhausted"); // unreachable
        if (std::find(windows.begin(), windows.end(), m) != windows.end())
            continue;
        if (std::find(forb.begin(), forb.end(), m) != forb.end())
            continue;
        masks.push_back(m);
    }
    return masks;
}

/// Orients every host-guest edge of an embedded K(p, q): guest j points at
/// exactly the hosts in masks[j], all other hosts point at guest j.
inline std::vector<uint32_t> orient_bipartite_lambda(Digraph& d, const std::vector<int>& hosts,
                                                     const std::vector<int>& guests, int lambda,
                                                     const std::vector<uint32_t>& forbidden = {}) {
    const int p = int(hosts.size()), q = int(guests.size());
    std::vector<uint32_t> masks = lambda_out_masks(p, q, lambda, forbidden);
    for (int j = 0; j < q; ++j)
        for (int t = 0; t < p; ++t) {
            if (masks[j] >> t & 1)
                d.add_arc(guests[j], hosts[t]);
            else
                d.add_arc(hosts[t], guests[j]);
        }
    return masks;
}

namespace detail {

inline void verify_diameter(const Digraph& d, int expected, const char* who) {
    const DiameterReport r = diameter_report(d);
    if (!r.strong || r.diameter != expected)
        throw std::logic_error(std::string(who) + ": internal verification failed, diameter " +
                               (r.strong ? std::to_string(r.diameter) : std::string("INF")) +
                               " != " + std::to_string(expected));
}

// Arcs between a vertex and the three hub vertices 0,1,2: hub i points at v
// exactly when bit i is set.
inline void hub_arcs(Digraph& d, int v, unsigned bits) {
    for (int i = 0; i < 3; ++i) {
        if (bits >> i & 1)
            d.add_arc(i, v);
        else
            d.add_arc(v, i);
    }
}

// Even cyclic positions first, then odd ones, until `count` are chosen. For
// every block size used below the result is not a cyclic interval, so it can
// serve as a forbidden out-set without colliding with any window.
inline std::vector<int> block_positions(int p, int count) {
    std::vector<int> pos;
    for (int i = 0; i < p && int(pos.size()) < count; i += 2)
        pos.push_back(i);
    for (int i = 1; i < p && int(pos.size()) < count; i += 2)
        pos.push_back(i);
    std::sort(pos.begin(), pos.end());
    return pos;
}

inline uint32_t positions_mask(const std::vector<int>& pos) {
    uint32_t m = 0;
    for (int i : pos)
        m |= uint32_t(1) << i;
    return m;
}

} // namespace detail

/// Width-lambda orientation of K(p, q): hosts 0..p-1, guests p..p+q-1. Every
/// guest's out-neighborhood is a distinct lambda-subset of the hosts, with
/// all p cyclic windows present; both sides then sit at pairwise distance
/// <= 2 and the whole digraph has diameter exactly 3.
inline Constructed bipartite_lambda_orientation(int p, int q, int lambda,
                                                const std::vector<std::vector<int>>& forbidden = {}) {
    std::vector<uint32_t> forb_masks;
    for (const auto& set : forbidden) {
        uint32_t m = 0;
        for (int i : set) {
            if (i < 0 || i >= p)
                throw RangeError("forbidden out-set names host " + std::to_string(i) +
                                 " outside 0.." + std::to_string(p - 1));
            m |= uint32_t(1) << i;
        }
        forb_masks.push_back(m);
    }
    Digraph d(p + q);
    std::vector<int> hosts(p), guests(q);
    for (int i = 0; i < p; ++i)
        hosts[i] = i;
    for (int j = 0; j < q; ++j)
        guests[j] = p + j;
    orient_bipartite_lambda(d, hosts, guests, lambda, forb_masks);

    // The diameter-3 claim only covers this parameter regime; outside it the
    // caller's own verification arbitrates.
    if (p >= 4 && lambda >= 2 && p - lambda >= 2)
        detail::verify_diameter(d, 3, "bipartite_lambda_orientation");

    ConstructionPlan plan;
    plan.kind = ConstructionKind::BipartiteLambda;
    plan.p = p;
    plan.q = q;
    plan.lambda = lambda;
    plan.forbidden_out_sets = forbidden;
    return {plan, std::move(d)};
}

namespace detail {

// Shared body of the odd/even assemblies: the middle part splits into a
// plain block (hub 1 in) and a distinguished block of size k_dist (hubs 1,2
// in); the last part splits into q1 vertices below hubs 2,3 and q2 below hub
// 3 alone, each side carrying an embedded width-lambda orientation over the
// middle part.
inline Constructed two_block_orientation(int p, int q, int k_dist, int lambda1, int lambda2,
                                         bool forbid_in_first, const BigInt& cap1,
                                         const BigInt& cap2, const BigInt& q_max,
                                         std::optional<std::pair<int, int>> q_split,
                                         ConstructionKind kind, const char* who) {
    if (q < 2 * p || BigInt(q) > q_max)
        throw RangeError(std::string(who) + ": q=" + std::to_string(q) +
                         " outside [" + std::to_string(2 * p) + ", " + q_max.str() + "]");

    long long q1, q2;
    if (q_split) {
        q1 = q_split->first;
        q2 = q_split->second;
        if (q1 + q2 != q)
            throw RangeError(std::string(who) + ": q_split must sum to q");
    } else {
        q2 = std::min<long long>(q - p, clamp_to(cap2, q));
        q1 = q - q2;
    }
    if (q1 < p || BigInt(q1) > cap1)
        throw RangeError(std::string(who) + ": infeasible split, q1=" + std::to_string(q1) +
                         " outside [" + std::to_string(p) + ", " + cap1.str() + "]");
    if (q2 < p || BigInt(q2) > cap2)
        throw RangeError(std::string(who) + ": infeasible split, q2=" + std::to_string(q2) +
                         " outside [" + std::to_string(p) + ", " + cap2.str() + "]");

    const PartLayout L = layout({3, p, q});
    Digraph d(L.total());
    const std::vector<int> mids = L.part_vertices(1);

    const std::vector<int> dist_pos = block_positions(p, k_dist);
    const uint32_t dist_mask = positions_mask(dist_pos);
    if (is_cyclic_window(dist_mask, p))
        throw std::logic_error(std::string(who) + ": distinguished block fell on a window");

    for (int i = 0; i < p; ++i)
        hub_arcs(d, mids[i], (dist_mask >> i & 1) ? 0b011u : 0b001u);

    std::vector<int> side1, side2; // below hubs {2,3} resp. {3}
    for (int j = 0; j < q; ++j) {
        const int z = L.vertex(2, j);
        if (j < q1) {
            hub_arcs(d, z, 0b110u);
            side1.push_back(z);
        } else {
            hub_arcs(d, z, 0b100u);
            side2.push_back(z);
        }
    }

    const std::vector<uint32_t> forb{dist_mask};
    orient_bipartite_lambda(d, mids, side1, lambda1, forbid_in_first ? forb : std::vector<uint32_t>{});
    orient_bipartite_lambda(d, mids, side2, lambda2, forbid_in_first ? std::vector<uint32_t>{} : forb);

    verify_diameter(d, 2, who);

    ConstructionPlan plan;
    plan.kind = kind;
    plan.p = p;
    plan.q = q;
    plan.q_split = {int(q1), int(q2)};
    plan.v2_distinguished = dist_pos;
    plan.forbidden_out_sets = {dist_pos};
    return {plan, std::move(d)};
}

} // namespace detail

/// Diameter-2 orientation of K(3, p, q) for odd p = 2k+1 >= 5 and
/// 2p <= q <= C(p+1, k+1) - 1. The distinguished middle block has size k and
/// the embedded widths are k+1 (first side) and k (second side, which must
/// avoid the distinguished block as an out-set).
inline Constructed odd_orientation(int p, int q,
                                   std::optional<std::pair<int, int>> q_split = {}) {
    if (p < 5 || p % 2 == 0)
        throw RangeError("odd_orientation: p must be odd and >= 5");
    const int k = p / 2;
    return detail::two_block_orientation(p, q, k, k + 1, k,
                                         /*forbid_in_first=*/false, binom(p, k + 1),
                                         binom(p, k) - 1, binom(p + 1, k + 1) - 1, q_split,
                                         ConstructionKind::Odd, "odd_orientation");
}

/// Diameter-2 orientation of K(3, p, q) for even p = 2k+2 >= 6 and
/// 2p <= q <= C(p+1, k+2) - 1. The distinguished block has size k+2; here the
/// first side (width k+2) is the one that must avoid it.
inline Constructed even_orientation(int p, int q,
                                    std::optional<std::pair<int, int>> q_split = {}) {
    if (p < 6 || p % 2 == 1)
        throw RangeError("even_orientation: p must be even and >= 6");
    const int k = (p - 2) / 2;
    return detail::two_block_orientation(p, q, k + 2, k + 2, k + 1,
                                         /*forbid_in_first=*/true, binom(p, k + 2) - 1,
                                         binom(p, k + 1), binom(p + 1, k + 2) - 1, q_split,
                                         ConstructionKind::Even, "even_orientation");
}

/// Diameter-2 orientation of K(3, p, q) built around two singleton middle
/// classes and an embedded width-floor((p-2)/2) orientation on the rest.
/// Base range p <= q <= 2 + C(p-2, floor((p-2)/2)); each enabled extension
/// vertex (plus: fed by all hubs, feeds the middle part; minus: the reverse)
/// shifts both ends of the range up by one.
inline Constructed singleton_orientation_55(int p, int q, bool plus, bool minus) {
    if (p < 5)
        throw RangeError("singleton_orientation_55: p must be >= 5");
    const int ext = int(plus) + int(minus);
    const int p1 = p - 2;
    const int lam = p1 / 2;
    const BigInt cap = binom(p1, lam);
    const BigInt q_max = 2 + ext + cap;
    if (q < p + ext || BigInt(q) > q_max)
        throw RangeError("singleton_orientation_55: q=" + std::to_string(q) + " outside [" +
                         std::to_string(p + ext) + ", " + q_max.str() + "]");
    const int q1 = q - 2 - ext;

    const PartLayout L = layout({3, p, q});
    Digraph d(L.total());
    const int y1 = L.vertex(1, 0), y2 = L.vertex(1, 1);
    std::vector<int> rest; // middle vertices below hub 3
    for (int i = 2; i < p; ++i)
        rest.push_back(L.vertex(1, i));

    detail::hub_arcs(d, y1, 0b001u);
    detail::hub_arcs(d, y2, 0b010u);
    for (int v : rest)
        detail::hub_arcs(d, v, 0b100u);

    const int z23 = L.vertex(2, 0), z13 = L.vertex(2, 1);
    detail::hub_arcs(d, z23, 0b110u);
    detail::hub_arcs(d, z13, 0b101u);
    std::vector<int> core; // last-part vertices below hubs 1,2
    for (int j = 0; j < q1; ++j)
        core.push_back(L.vertex(2, 2 + j));
    for (int z : core)
        detail::hub_arcs(d, z, 0b011u);

    int next = 2 + q1;
    const int z_plus = plus ? L.vertex(2, next++) : -1;
    const int z_minus = minus ? L.vertex(2, next++) : -1;
    if (plus)
        detail::hub_arcs(d, z_plus, 0b111u);
    if (minus)
        detail::hub_arcs(d, z_minus, 0b000u);

    // Forced arcs around the two singleton rows, then the two free pairs.
    d.add_arc(z23, y2);
    d.add_arc(z13, y1);
    for (int v : rest) {
        d.add_arc(z23, v);
        d.add_arc(z13, v);
    }
    d.add_arc(y1, z23);
    d.add_arc(y2, z13);
    for (int z : core) {
        d.add_arc(z, y1);
        d.add_arc(z, y2);
    }
    orient_bipartite_lambda(d, rest, core, lam);

    if (plus) {
        d.add_arc(z_plus, y1);
        d.add_arc(z_plus, y2);
        for (int v : rest)
            d.add_arc(z_plus, v);
    }
    if (minus) {
        d.add_arc(y1, z_minus);
        d.add_arc(y2, z_minus);
        for (int v : rest)
            d.add_arc(v, z_minus);
    }

    detail::verify_diameter(d, 2, "singleton_orientation_55");

    ConstructionPlan plan;
    plan.kind = plus && minus  ? ConstructionKind::Singleton55Both
                : plus         ? ConstructionKind::Singleton55Plus
                : minus        ? ConstructionKind::Singleton55Minus
                               : ConstructionKind::Singleton55;
    plan.p = p;
    plan.q = q;
    plan.lambda = lam;
    return {plan, std::move(d)};
}

/// Diameter-2 orientation of K(3, p, q) for p + 3 <= q <= 3 + C(p, floor(p/2)):
/// three special last-part vertices on top of an embedded width-floor(p/2)
/// orientation spanning the whole middle part.
inline Constructed near_bipartite_orientation_57(int p, int q) {
    if (p < 5)
        throw RangeError("near_bipartite_orientation_57: p must be >= 5");
    const int lam = p / 2;
    const BigInt q_max = 3 + binom(p, lam);
    if (q < p + 3 || BigInt(q) > q_max)
        throw RangeError("near_bipartite_orientation_57: q=" + std::to_string(q) +
                         " outside [" + std::to_string(p + 3) + ", " + q_max.str() + "]");

    const PartLayout L = layout({3, p, q});
    Digraph d(L.total());
    const int y1 = L.vertex(1, 0), y2 = L.vertex(1, 1), y12 = L.vertex(1, 2);
    detail::hub_arcs(d, y1, 0b001u);
    detail::hub_arcs(d, y2, 0b010u);
    detail::hub_arcs(d, y12, 0b011u);
    std::vector<int> prime; // the rest of the middle part, class {1,2}
    for (int i = 3; i < p; ++i) {
        prime.push_back(L.vertex(1, i));
        detail::hub_arcs(d, L.vertex(1, i), 0b011u);
    }

    const int z_plus = L.vertex(2, 0), z13 = L.vertex(2, 1), z23 = L.vertex(2, 2);
    detail::hub_arcs(d, z_plus, 0b111u);
    detail::hub_arcs(d, z13, 0b101u);
    detail::hub_arcs(d, z23, 0b110u);
    std::vector<int> tail; // last-part vertices below hub 3 alone
    for (int j = 3; j < q; ++j) {
        tail.push_back(L.vertex(2, j));
        detail::hub_arcs(d, L.vertex(2, j), 0b100u);
    }

    std::vector<int> mids = {y1, y2, y12};
    mids.insert(mids.end(), prime.begin(), prime.end());

    for (int v : mids)
        d.add_arc(z_plus, v);
    d.add_arc(z13, y1);
    d.add_arc(z13, y2);
    d.add_arc(z23, y2);
    d.add_arc(z23, y1);
    for (int v : prime) {
        d.add_arc(z13, v);
        d.add_arc(z23, v);
    }
    d.add_arc(y12, z13);
    d.add_arc(y12, z23);

    orient_bipartite_lambda(d, mids, tail, lam);

    detail::verify_diameter(d, 2, "near_bipartite_orientation_57");

    ConstructionPlan plan;
    plan.kind = ConstructionKind::NearBipartite57;
    plan.p = p;
    plan.q = q;
    plan.lambda = lam;
    return {plan, std::move(d)};
}

/// Dispatcher over the whole diameter-2 regime 5 <= p <= q <= threshold - 1,
/// with threshold = C(p+1, floor((p+1)/2)). First match in the fixed order
/// singleton base / plus / both, near-bipartite, odd/even.
inline Constructed construct_diameter2(int p, int q) {
    if (p < 5)
        throw RangeError("construct_diameter2: p must be >= 5");
    if (q < p)
        throw RangeError("construct_diameter2: need p <= q");
    const BigInt threshold = binom(p + 1, (p + 1) / 2);
    if (BigInt(q) >= threshold)
        throw RangeError("construct_diameter2: q=" + std::to_string(q) + " >= " +
                         threshold.str() +
                         " lies in the oriented-diameter-3 regime (Theorem 1.2)");

    const BigInt cap55 = binom(p - 2, (p - 2) / 2);
    const BigInt cap57 = binom(p, p / 2);
    if (BigInt(q) <= 2 + cap55)
        return singleton_orientation_55(p, q, false, false);
    if (BigInt(q) <= 3 + cap55)
        return singleton_orientation_55(p, q, true, false);
    if (BigInt(q) <= 4 + cap55)
        return singleton_orientation_55(p, q, true, true);
    if (BigInt(q) <= 3 + cap57)
        return near_bipartite_orientation_57(p, q);
    return p % 2 ? odd_orientation(p, q) : even_orientation(p, q);
}

} // namespace orient
