#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "orient/digraph.hpp"
#include "orient/error.hpp"

namespace orient {

// Edge-list text format: first line "n m", then m lines "u v" meaning the
// arc u -> v, 0-based, LF-terminated.

inline void write_edge_list(std::ostream& os, const Digraph& d) {
    os << d.size() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs())
        os << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Digraph& d) {
    std::ostringstream ss;
    write_edge_list(ss, d);
    return ss.str();
}

inline Digraph read_edge_list(std::istream& is) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() {
        if (!std::getline(is, line))
            throw ParseError("line " + std::to_string(lineno + 1) + ": unexpected end of input");
        ++lineno;
    };
    next_line();
    long long n = 0, m = 0;
    {
        std::istringstream ss(line);
        std::string junk;
        if (!(ss >> n >> m) || (ss >> junk) || n < 0 || m < 0)
            throw ParseError("line 1: expected header \"n m\"");
    }
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(size_t(m));
    for (long long i = 0; i < m; ++i) {
        next_line();
        std::istringstream ss(line);
        long long u = 0, v = 0;
        std::string junk;
        if (!(ss >> u >> v) || (ss >> junk))
            throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("line " + std::to_string(lineno) + ": vertex out of range [0, " +
                             std::to_string(n) + ")");
        arcs.emplace_back(int(u), int(v));
    }
    try {
        return Digraph::from_oriented_edges(int(n), arcs);
    } catch (const ValidationError& e) {
        throw ParseError(std::string("invalid arc set: ") + e.what());
    }
}

inline Digraph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw ParseError("cannot open " + path);
    return read_edge_list(f);
}

inline void write_edge_list_file(const std::string& path, const Digraph& d) {
    std::ofstream f(path);
    if (!f)
        throw ParseError("cannot write " + path);
    write_edge_list(f, d);
}

/// DOT export: one edge statement per arc.
inline void write_dot(std::ostream& os, const Digraph& d, const std::string& name = "D") {
    os << "digraph " << name << " {\n";
    for (auto [u, v] : d.arcs())
        os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
}

inline std::string to_dot(const Digraph& d, const std::string& name = "D") {
    std::ostringstream ss;
    write_dot(ss, d, name);
    return ss.str();
}

inline void write_dot_file(const std::string& path, const Digraph& d) {
    std::ofstream f(path);
    if (!f)
        throw ParseError("cannot write " + path);
    write_dot(f, d);
}

} // namespace orient
