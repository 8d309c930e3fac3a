#pragma once

#include <optional>
#include <string>
#include <vector>

#include "khoworks/diagram.hpp"

namespace khoworks {

// Multigraph with a vertex per circle of D_s and an edge per crossing.
struct StateGraph {
    struct Edge {
        int u, v;      // circle indices; u == v for a loop
        int crossing;  // edge tag
    };
    int vertices = 0;
    std::vector<Edge> edges;

    bool has_loop() const;
    // An edge is singular if it is not a loop and no other edge joins the
    // same pair of vertices (it is not part of a 2-gon).
    bool singular(int e) const;
    bool has_multi_edge() const;

    // Debug export, one line "u v crossing_index" per edge.
    std::string edge_list() const;
};

StateGraph build_state_graph(const LinkDiagram& d, const KauffmanState& s);

struct Adequacy {
    bool plus = false;          // G_{s+} loopless
    bool minus = false;         // G_{s-} loopless
    bool doubly_plus = false;   // loopless and 2-gon-free
    bool doubly_minus = false;
};

Adequacy adequacy(const LinkDiagram& d);

struct CycleAnalysis {
    bool has_odd_cycle = false;  // graph not bipartite (a loop counts)
    // Shortest cycle of even length >= 4 containing a singular edge, as a
    // vertex sequence (first vertex not repeated at the end).
    std::optional<std::vector<int>> even_cycle_with_singular_edge;
};

CycleAnalysis cycle_analysis(const StateGraph& g);

}  // namespace khoworks
