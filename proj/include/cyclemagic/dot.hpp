#pragma once

#include <sstream>
#include <string>

#include "cyclemagic/graph.hpp"
#include "cyclemagic/labeling.hpp"

namespace cyclemagic {

// DOT description of a graph, nodes and edges in sorted order. With a
// labeling, labels are attached as element attributes.
inline std::string to_dot(const Graph& g, const std::string& name,
                          const TotalLabeling* lab = nullptr) {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (const std::string& v : g.sorted_vertices()) {
        out << "  \"" << v << "\"";
        if (lab) out << " [label=\"" << v << "=" << lab->vertex_labels.at(v) << "\"]";
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  \"" << e.first << "\" -- \"" << e.second << "\"";
        if (lab) out << " [label=\"" << lab->edge_labels.at(e) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cyclemagic
