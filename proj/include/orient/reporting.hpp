#pragma once

#include <json.hpp>

#include "orient/bounds.hpp"
#include "orient/constructions.hpp"
#include "orient/digraph.hpp"
#include "orient/multipartite.hpp"
#include "orient/search.hpp"
#include "orient/structure.hpp"
#include "orient/thresholds.hpp"

namespace orient {

using Json = nlohmann::json;

inline Json big_to_json(const BigInt& v) {
    return fits_int64(v) ? Json(v.convert_to<long long>()) : Json(v.str());
}

inline Json to_json(const DiameterReport& r) {
    Json j;
    j["strong"] = r.strong;
    j["diameter"] = r.diameter == kInfiniteDistance ? Json("INFINITE") : Json(r.diameter);
    j["witness"] = {r.witness.first, r.witness.second};
    if (r.distances) {
        Json rows = Json::array();
        for (int u = 0; u < r.distances->n; ++u) {
            Json row = Json::array();
            for (int v = 0; v < r.distances->n; ++v) {
                const int x = r.distances->at(u, v);
                row.push_back(x == kInfiniteDistance ? Json("INFINITE") : Json(x));
            }
            rows.push_back(std::move(row));
        }
        j["distances"] = std::move(rows);
    }
    return j;
}

inline Json to_json(const ConstructionPlan& p) {
    Json j;
    j["kind"] = kind_name(p.kind);
    j["p"] = p.p;
    j["q"] = p.q;
    j["lambda"] = p.lambda ? Json(*p.lambda) : Json(nullptr);
    j["q_split"] =
        p.q_split ? Json(Json::array({p.q_split->first, p.q_split->second})) : Json(nullptr);
    j["v2_even_positions"] = p.v2_distinguished;
    return j;
}

inline Json to_json(const PartLayout& L) { return Json{{"parts", L.part_sizes}}; }

inline Json to_json(const HPartition& h) {
    Json sizes = Json::object();
    for (int bits = 0; bits < 8; ++bits)
        if (h.sizes[bits] > 0)
            sizes[class_name(unsigned(bits))] = h.sizes[bits];
    return Json{{"count", h.nonempty}, {"sizes", std::move(sizes)}};
}

inline Json to_json(const Violation& v) {
    return Json{{"predicate", v.predicate}, {"detail", v.detail}, {"witnesses", v.witnesses}};
}

inline Json to_json(const MixedPair& mp) {
    Json cls = Json::array();
    for (uint8_t b : mp.mixed_classes)
        cls.push_back(class_name(b));
    return Json{{"part", mp.side + 2},
                {"class", class_name(mp.cls)},
                {"class_size", mp.class_size},
                {"mixed_block_size", mp.mixed_size},
                {"mixed_classes", std::move(cls)},
                {"bound", big_to_json(mp.bound)},
                {"within_bound", mp.within_bound}};
}

inline Json to_json(const StructureReport& r, const PartLayout& L) {
    auto part_classes = [&](int side) {
        Json a = Json::array();
        for (int v : L.part_vertices(side + 1))
            a.push_back(class_name(r.classes.bits_of[v]));
        return a;
    };
    Json vio = Json::array();
    for (const Violation& v : r.violations)
        vio.push_back(to_json(v));
    Json mixed = Json::array();
    for (const MixedPair& mp : r.mixed_pairs)
        mixed.push_back(to_json(mp));
    return Json{{"v2_classes", part_classes(0)},
                {"v3_classes", part_classes(1)},
                {"h", to_json(r.h)},
                {"violations", std::move(vio)},
                {"mixed_pairs", std::move(mixed)}};
}

inline Json to_json(const FormulaVerdict& v) {
    Json j;
    switch (v.kind) {
    case FormulaVerdict::Kind::Exact: j["f"] = v.f; break;
    case FormulaVerdict::Kind::UnknownWithin23:
        j["f"] = "unknown";
        j["range"] = {2, 3};
        break;
    case FormulaVerdict::Kind::None: j["f"] = "none"; break;
    }
    j["source"] = v.source;
    return j;
}

inline Json to_json(const CaseBound& cb) {
    switch (cb.kind) {
    case CaseBound::Kind::Bound: return big_to_json(cb.bound);
    case CaseBound::Kind::Impossible: return "IMPOSSIBLE";
    default: return "NONE";
    }
}

inline Json witness_edges_json(const std::optional<Digraph>& w) {
    if (!w)
        return nullptr;
    Json a = Json::array();
    for (auto [u, v] : w->arcs())
        a.push_back(Json::array({u, v}));
    return a;
}

inline Json to_json(const SearchResult& r) {
    Json j;
    j["f"] = r.f ? Json(*r.f) : Json("none");
    j["method"] = r.method == SearchResult::Method::FullEnum ? "FULL_ENUM" : "BACKTRACK";
    j["examined"] = r.examined;
    j["witness_edges"] = witness_edges_json(r.witness);
    return j;
}

} // namespace orient
