#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "minors/graph.hpp"

namespace minors {

struct graph_format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n,
// edges sorted lexicographically, one trailing newline per line.
inline void write_graph(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string graph_to_string(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

inline Graph read_graph(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw graph_format_error("graph header missing");
    std::istringstream hs(line);
    long long n = -1, m = -1;
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw graph_format_error("bad graph header: " + line);
    if (n < 0 || m < 0) throw graph_format_error("negative counts in header");
    Graph g(static_cast<int>(n));
    long long pu = -1, pv = -1;
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(is, line)) throw graph_format_error("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v) || (es >> extra)) throw graph_format_error("bad edge line: " + line);
        if (u < 0 || v < 0 || u >= n || v >= n) throw graph_format_error("vertex out of range: " + line);
        if (u == v) throw graph_format_error("loop rejected: " + line);
        if (u > v) throw graph_format_error("edge not in u < v form: " + line);
        if (u < pu || (u == pu && v < pv)) throw graph_format_error("edges not sorted: " + line);
        if (u == pu && v == pv) throw graph_format_error("duplicate edge: " + line);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
        pu = u;
        pv = v;
    }
    if (is >> extra) throw graph_format_error("trailing content after edge list: " + extra);
    return g;
}

inline Graph graph_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_graph(is);
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw graph_format_error("cannot open " + path);
    return read_graph(f);
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw graph_format_error("cannot open " + path + " for writing");
    write_graph(f, g);
}

} // namespace minors
