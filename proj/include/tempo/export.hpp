#pragma once

#include <ostream>

#include "tempo/expansion.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

// DOT and DIMACS writers for derived graphs. Expansion vertices are labeled
// "v@t" when provenance labels are present.

inline void write_dot(const StaticGraph& g, std::ostream& out) {
    out << "graph {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
    for (const auto& [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
    out << "}\n";
}

inline void write_dot(const StaticDigraph& g, std::ostream& out) {
    out << "digraph {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v;
        if (g.has_labels())
            out << " [label=\"" << g.labels()[v].first << '@' << g.labels()[v].second << "\"]";
        out << ";\n";
    }
    for (const auto& [a, b] : g.arcs()) out << "  " << a << " -> " << b << ";\n";
    out << "}\n";
}

inline void write_dot(const LabeledGraph& g, std::ostream& out) {
    out << "graph {\n";
    for (Vertex v = 0; v < g.base.num_vertices(); ++v) out << "  " << v << ";\n";
    for (const auto& [a, b] : g.base.edges())
        out << "  " << a << " -- " << b << " [label=\"" << g.label.at({a, b}) << "\"];\n";
    out << "}\n";
}

inline void write_dimacs(const StaticGraph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const auto& [a, b] : g.edges()) out << "e " << a + 1 << ' ' << b + 1 << '\n';
}

inline void write_dimacs(const StaticDigraph& g, std::ostream& out) {
    out << "p edge " << g.num_vertices() << ' ' << g.num_arcs() << '\n';
    for (const auto& [a, b] : g.arcs()) out << "a " << a + 1 << ' ' << b + 1 << '\n';
}

} // namespace tempo
