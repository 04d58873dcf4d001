#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "orient/binomial.hpp"
#include "orient/error.hpp"

namespace orient {

/// Closed-form oriented-diameter verdict. Exact where a classification is
/// known; complete multipartite graphs with at least three parts always have
/// oriented diameter 2 or 3, so unclassified shapes report that window.
struct FormulaVerdict {
    enum class Kind { Exact, UnknownWithin23, None } kind = Kind::Exact;
    int f = 0;          // meaningful only when kind == Exact
    std::string source; // which result produced the verdict
};

/// Least q with oriented diameter 3 for K(3,p,q), p >= 5:
/// C(p+1, floor((p+1)/2)).
inline BigInt threshold_3pq(int p) {
    if (p < 5)
        throw RangeError("threshold_3pq: p must be >= 5 (smaller p follows other rules)");
    return binom(p + 1, (p + 1) / 2);
}

/// Oriented diameter of a complete multipartite graph from the known
/// closed-form results. Parts are normalized ascending, so K(q,p,3) and
/// K(3,p,q) are the same query.
inline FormulaVerdict f_formula(std::vector<long long> parts) {
    if (parts.empty())
        throw RangeError("f_formula: empty part list");
    for (long long s : parts)
        if (s < 1)
            throw RangeError("f_formula: part sizes must be >= 1");
    std::sort(parts.begin(), parts.end());
    const int n = int(parts.size());

    if (n == 1)
        return {FormulaVerdict::Kind::None, 0,
                parts[0] == 1 ? "single vertex" : "edgeless graph (disconnected)"};

    const bool complete_graph = parts.back() == 1;
    if (complete_graph) {
        if (n <= 2)
            return {FormulaVerdict::Kind::None, 0, "Robbins (bridged)"};
        return {FormulaVerdict::Kind::Exact, n == 4 ? 3 : 2, "Boesch-Tindell"};
    }

    if (n == 2) {
        const long long p = parts[0], q = parts[1];
        if (p == 1)
            return {FormulaVerdict::Kind::None, 0, "Robbins (bridged star)"};
        return {FormulaVerdict::Kind::Exact, BigInt(q) <= central_binom(p) ? 3 : 4, "Soltes"};
    }

    if (n == 3) {
        const long long a = parts[0], b = parts[1], q = parts[2];
        if (a == 2)
            return BigInt(q) <= central_binom(b)
                       ? FormulaVerdict{FormulaVerdict::Kind::Exact, 2, "Koh-Tan"}
                       : FormulaVerdict{FormulaVerdict::Kind::Exact, 3, "Liu-Rao-Zhang-Zhou"};
        if (a == 3 && b == 3)
            return {FormulaVerdict::Kind::Exact, q <= 6 ? 2 : 3, "Liu-Zhou"};
        if (a == 3 && b == 4)
            return {FormulaVerdict::Kind::Exact, q <= 11 ? 2 : 3, "Liu-Zhou"};
        if (a == 3 && b >= 5)
            return {FormulaVerdict::Kind::Exact,
                    BigInt(q) <= threshold_3pq(int(b)) - 1 ? 2 : 3, "Theorem 1.2"};
    }

    return {FormulaVerdict::Kind::UnknownWithin23, 0, "Plesnik/Gutin/Koh-Tan bound"};
}

} // namespace orient
