#include "khoworks/state_graph.hpp"

#include <algorithm>
#include <sstream>

namespace khoworks {

bool StateGraph::has_loop() const {
    for (const Edge& e : edges)
        if (e.u == e.v) return true;
    return false;
}

bool StateGraph::singular(int e) const {
    const Edge& a = edges[e];
    if (a.u == a.v) return false;
    for (int f = 0; f < static_cast<int>(edges.size()); ++f) {
        if (f == e) continue;
        const Edge& b = edges[f];
        if ((b.u == a.u && b.v == a.v) || (b.u == a.v && b.v == a.u))
            return false;
    }
    return true;
}

bool StateGraph::has_multi_edge() const {
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        const Edge& a = edges[e];
        if (a.u == a.v) continue;
        for (int f = e + 1; f < static_cast<int>(edges.size()); ++f) {
            const Edge& b = edges[f];
            if ((b.u == a.u && b.v == a.v) || (b.u == a.v && b.v == a.u))
                return true;
        }
    }
    return false;
}

std::string StateGraph::edge_list() const {
    std::ostringstream out;
    for (const Edge& e : edges)
        out << e.u << " " << e.v << " " << e.crossing << "\n";
    return out.str();
}

StateGraph build_state_graph(const LinkDiagram& d, const KauffmanState& s) {
    StateCircles sc = smooth(d, s);
    StateGraph g;
    g.vertices = sc.count;
    for (int c = 0; c < d.crossing_count(); ++c) {
        // The two smoothing pairs: one contains slot 0, the other the
        // remaining two slots.
        int u = sc.circle_of[4 * c];
        int partner = s.markers[c] > 0 ? 3 : 1;
        int other_slot = partner == 1 ? 2 : 1;
        int v = sc.circle_of[4 * c + other_slot];
        g.edges.push_back({u, v, c});
    }
    return g;
}

Adequacy adequacy(const LinkDiagram& d) {
    auto [sp, sm] = special_states(d);
    StateGraph gp = build_state_graph(d, sp);
    StateGraph gm = build_state_graph(d, sm);
    Adequacy a;
    a.plus = !gp.has_loop();
    a.minus = !gm.has_loop();
    a.doubly_plus = a.plus && !gp.has_multi_edge();
    a.doubly_minus = a.minus && !gm.has_multi_edge();
    return a;
}

namespace {

bool bipartite(const StateGraph& g) {
    std::vector<int> color(g.vertices, -1);
    std::vector<std::vector<int>> adj(g.vertices);
    for (const auto& e : g.edges) {
        if (e.u == e.v) return false;  // loop = odd cycle
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> stack;
    for (int s = 0; s < g.vertices; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = color[u] ^ 1;
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Shortest simple path u -> v of odd length >= 3 that avoids edge `skip`.
// Graphs here are tiny (<= 16 edges), so plain DFS enumeration is fine.
void odd_path_dfs(const StateGraph& g,
                  const std::vector<std::vector<std::pair<int, int>>>& adj,
                  int cur, int target, int skip, std::vector<char>& used,
                  std::vector<int>& path, std::vector<int>& best) {
    if (!best.empty() && path.size() >= best.size()) return;  // prune
    for (auto [next, eidx] : adj[cur]) {
        if (eidx == skip || used[next]) continue;
        if (next == target) {
            // path.size() edges from the start once we step onto the target
            if (path.size() % 2 == 1 && path.size() >= 3 &&
                (best.empty() || path.size() + 1 < best.size())) {
                best = path;
                best.push_back(target);
            }
            continue;
        }
        used[next] = 1;
        path.push_back(next);
        odd_path_dfs(g, adj, next, target, skip, used, path, best);
        path.pop_back();
        used[next] = 0;
    }
}

}  // namespace

CycleAnalysis cycle_analysis(const StateGraph& g) {
    CycleAnalysis out;
    out.has_odd_cycle = !bipartite(g);

    std::vector<std::vector<std::pair<int, int>>> adj(g.vertices);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (g.edges[e].u == g.edges[e].v) continue;
        adj[g.edges[e].u].push_back({g.edges[e].v, e});
        adj[g.edges[e].v].push_back({g.edges[e].u, e});
    }
    std::vector<int> best;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        if (!g.singular(e)) continue;
        // cycle = singular edge (u,v) + odd path v -> u avoiding it
        int u = g.edges[e].u, v = g.edges[e].v;
        std::vector<char> used(g.vertices, 0);
        used[v] = 1;
        std::vector<int> path{v}, found;
        odd_path_dfs(g, adj, v, u, e, used, path, found);
        if (!found.empty() && (best.empty() || found.size() < best.size()))
            best = found;
    }
    if (!best.empty()) out.even_cycle_with_singular_edge = best;
    return out;
}

}  // namespace khoworks
