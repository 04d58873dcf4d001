#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orient/binomial.hpp"
#include "orient/digraph.hpp"
#include "orient/error.hpp"
#include "orient/multipartite.hpp"

namespace orient {

// A vertex of the middle or last part of an oriented K(3,p,q) is classified
// by which of the three hub vertices point INTO it: bit i set means hub i
// does. Bits 0b111 is the "+" class, 0b000 the "-" class.

inline std::string class_name(unsigned bits) {
    if (bits == 0)
        return "-";
    if (bits == 7)
        return "+";
    std::string s;
    for (int i = 0; i < 3; ++i)
        if (bits >> i & 1)
            s += char('1' + i);
    return s;
}

struct ClassAssignment {
    // members[side][bits]: vertices of part side+1 in class `bits`.
    std::array<std::array<std::vector<int>, 8>, 2> members{};
    std::vector<uint8_t> bits_of; // per vertex; 0xFF on the hub part

    int class_size(int side, unsigned bits) const { return int(members[side][bits].size()); }
};

/// Classify every non-hub vertex of a complete tripartite orientation whose
/// first part is the three hubs.
inline ClassAssignment classify(const Digraph& d, const PartLayout& L) {
    if (L.parts() != 3 || L.part_sizes[0] != 3)
        throw ValidationError("classify: layout must be K(3,p,q) with the 3-part first");
    if (d.size() != L.total())
        throw ValidationError("classify: digraph size does not match layout");
    if (!is_complete_multipartite_orientation(d, L))
        throw ValidationError("classify: not a complete tripartite orientation of the layout");
    ClassAssignment c;
    c.bits_of.assign(d.size(), 0xFF);
    for (int side = 0; side < 2; ++side)
        for (int v : L.part_vertices(side + 1)) {
            unsigned bits = 0;
            for (int i = 0; i < 3; ++i)
                if (d.has_arc(i, v))
                    bits |= 1u << i;
            c.bits_of[v] = uint8_t(bits);
            c.members[side][bits].push_back(v);
        }
    return c;
}

struct HPartition {
    std::array<int, 8> sizes{}; // middle-part class sizes indexed by bits
    int nonempty = 0;
};

/// The partition of the middle part into nonempty classes; the case analysis
/// branches on how many there are.
inline HPartition h_partition(const ClassAssignment& c) {
    HPartition h;
    for (int bits = 0; bits < 8; ++bits) {
        h.sizes[bits] = c.class_size(0, bits);
        if (h.sizes[bits] > 0)
            ++h.nonempty;
    }
    return h;
}

// One failed structural predicate, with witnesses. Predicates are numbered
// 1..5; every orientation with diameter two satisfies all of them, so any
// violation certifies the diameter is not two.
struct Violation {
    int predicate = 0;
    std::string detail;
    std::vector<int> witnesses;
};

struct MixedPair {
    int side = 0;        // 0 = class lives in the middle part, 1 = last part
    uint8_t cls = 0;     // its bits
    int class_size = 0;  // q_A
    int mixed_size = 0;  // p_2, total size of opposite classes with two-way arcs
    std::vector<uint8_t> mixed_classes;
    BigInt bound;        // C(p_2, floor(p_2/2))
    bool within_bound = true;
};

namespace detail {

// Arc pattern between two vertex sets: does any arc run X->Y, any Y->X?
inline std::pair<bool, bool> arc_pattern(const Digraph& d, const std::vector<int>& X,
                                         const std::vector<int>& Y) {
    bool xy = false, yx = false;
    for (int x : X) {
        for (int y : Y) {
            if (d.has_arc(x, y))
                xy = true;
            else
                yx = true;
            if (xy && yx)
                return {true, true};
        }
    }
    return {xy, yx};
}

inline bool subset_proper(unsigned a, unsigned b) { return a != b && (a & b) == a; }

} // namespace detail

/// All structural-predicate failures of an oriented K(3,p,q); scans every
/// predicate rather than stopping at the first, so the analyzer doubles as a
/// debugging tool. `mixed_out`, when given, receives the mixed-pair table.
inline std::vector<Violation> check_lemma31(const Digraph& d, const PartLayout& L,
                                            const ClassAssignment& c,
                                            std::vector<MixedPair>* mixed_out = nullptr) {
    std::vector<Violation> out;

    // (1) no class may be nonempty in both non-hub parts
    for (unsigned bits = 0; bits < 8; ++bits)
        if (c.class_size(0, bits) > 0 && c.class_size(1, bits) > 0)
            out.push_back({1,
                           "class " + class_name(bits) + " nonempty in both non-hub parts",
                           {c.members[0][bits].front(), c.members[1][bits].front()}});

    for (int side = 0; side < 2; ++side) {
        const int other = 1 - side;
        const std::vector<int> other_part = L.part_vertices(other + 1);

        // (3) a "+" class must be a singleton pointing at the whole opposite
        // part; dually for "-"
        for (unsigned bits : {7u, 0u}) {
            const auto& cls = c.members[side][bits];
            if (cls.empty())
                continue;
            if (cls.size() > 1)
                out.push_back({3,
                               "class " + class_name(bits) + " has " +
                                   std::to_string(cls.size()) + " vertices, must be 1",
                               {cls[0], cls[1]}});
            for (int v : cls)
                for (int w : other_part) {
                    const bool ok = bits == 7 ? d.has_arc(v, w) : d.has_arc(w, v);
                    if (!ok) {
                        out.push_back({3,
                                       "class " + class_name(bits) +
                                           " vertex lacks the required arc direction",
                                       {v, w}});
                        goto next_class3;
                    }
                }
        next_class3:;
        }

        // (5) for nested classes A of this part, B of the other, arcs run B -> A
        for (unsigned a = 0; a < 8; ++a) {
            if (c.members[side][a].empty())
                continue;
            for (unsigned b = 0; b < 8; ++b) {
                if (!detail::subset_proper(a, b) || c.members[other][b].empty())
                    continue;
                for (int v : c.members[side][a])
                    for (int w : c.members[other][b])
                        if (d.has_arc(v, w)) {
                            out.push_back({5,
                                           "arc from class " + class_name(a) +
                                               " into larger class " + class_name(b) +
                                               " (must run the other way)",
                                           {v, w}});
                            goto next_pair5;
                        }
            next_pair5:;
            }
        }

        // (2)/(4) uniform classes must be singletons; mixed pairs obey the
        // antichain size bound
        for (unsigned a = 0; a < 8; ++a) {
            const auto& cls = c.members[side][a];
            if (cls.empty())
                continue;
            MixedPair mp;
            mp.side = side;
            mp.cls = uint8_t(a);
            mp.class_size = int(cls.size());
            for (unsigned b = 0; b < 8; ++b) {
                const auto& o = c.members[other][b];
                if (o.empty())
                    continue;
                auto [xy, yx] = detail::arc_pattern(d, cls, o);
                if (xy && yx) {
                    mp.mixed_size += int(o.size());
                    mp.mixed_classes.push_back(uint8_t(b));
                }
            }
            if (mp.mixed_size == 0) {
                if (cls.size() > 1)
                    out.push_back({2,
                                   "class " + class_name(a) +
                                       " has uniform arcs to every opposite class but size " +
                                       std::to_string(cls.size()),
                                   {cls[0], cls[1]}});
            } else {
                mp.bound = central_binom(mp.mixed_size);
                mp.within_bound = BigInt(mp.class_size) <= mp.bound;
                if (!mp.within_bound)
                    out.push_back({4,
                                   "class " + class_name(a) + " of size " +
                                       std::to_string(mp.class_size) +
                                       " exceeds the antichain bound C(" +
                                       std::to_string(mp.mixed_size) + ", floor/2) = " +
                                       mp.bound.str(),
                                   {cls.front()}});
                if (mixed_out)
                    mixed_out->push_back(mp);
            }
        }
    }
    return out;
}

struct StructureReport {
    ClassAssignment classes;
    HPartition h;
    std::vector<Violation> violations;
    std::vector<MixedPair> mixed_pairs;
};

inline StructureReport analyze_structure(const Digraph& d, const PartLayout& L) {
    StructureReport r;
    r.classes = classify(d, L);
    r.h = h_partition(r.classes);
    r.violations = check_lemma31(d, L, r.classes, &r.mixed_pairs);
    return r;
}

} // namespace orient
