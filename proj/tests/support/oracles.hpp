#pragma once

// Independent oracles: these deliberately avoid the library's algorithms so
// the tests cross-check two routes to the same value.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "ccrit/connectivity.hpp"
#include "ccrit/graph.hpp"

namespace oracles {

using ccrit::Int;
using ccrit::IntegerWeighting;
using ccrit::MultiEdgeGraph;
using ccrit::SimpleGraph;
using ccrit::VertexPair;

// All-pairs shortest paths by Floyd-Warshall over exact integers.
inline std::vector<std::vector<Int>> floyd_warshall(const MultiEdgeGraph& g, const IntegerWeighting& w) {
    const int n = g.n;
    std::vector<std::vector<Int>> d(n, std::vector<Int>(n));
    std::vector<std::vector<bool>> inf(n, std::vector<bool>(n, true));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        inf[i][i] = false;
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.edges[e].a, b = g.edges[e].b;
        if (inf[a][b] || w[e] < d[a][b]) {
            d[a][b] = d[b][a] = w[e];
            inf[a][b] = inf[b][a] = false;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (inf[i][k]) continue;
            for (int j = 0; j < n; ++j) {
                if (inf[k][j]) continue;
                Int via = d[i][k] + d[k][j];
                if (inf[i][j] || via < d[i][j]) {
                    d[i][j] = via;
                    inf[i][j] = false;
                }
            }
        }
    return d;
}

struct PathEnumeration {
    bool connected = false;
    Int shortest;                     // d(s,t)
    std::vector<bool> edge_on_shortest;  // per edge id
};

// Exhaustive vertex-simple s-t path enumeration (edge-id sequences, so
// parallel edges count separately).
inline PathEnumeration enumerate_st_paths(const MultiEdgeGraph& g, const IntegerWeighting& w, int s, int t) {
    PathEnumeration out;
    out.edge_on_shortest.assign(g.edge_count(), false);
    auto adj = g.adjacency();
    std::vector<bool> visited(g.n, false);
    bool have = false;

    std::vector<std::pair<std::vector<int>, Int>> paths;
    std::vector<int> stack_edges;

    std::function<void(int, Int)> dfs = [&](int v, Int weight) {
        if (v == t) {
            paths.push_back({stack_edges, weight});
            if (!have || weight < out.shortest) {
                out.shortest = weight;
                have = true;
            }
            return;
        }
        visited[v] = true;
        for (auto& [to, e] : adj[v]) {
            if (visited[to] || to == s) continue;
            stack_edges.push_back(e);
            dfs(to, weight + w[e]);
            stack_edges.pop_back();
        }
        visited[v] = false;
    };
    visited[s] = true;
    dfs(s, Int(0));

    out.connected = have;
    if (have)
        for (auto& [edges, weight] : paths)
            if (weight == out.shortest)
                for (int e : edges) out.edge_on_shortest[e] = true;
    return out;
}

// Naive recheck of a 2-separation witness: both sides >= 3 edges, the side
// edge sets are disjoint, cover the graph, and stay inside their side.
inline bool confirm_separation(const SimpleGraph& g, const ccrit::TwoSeparationWitness& w) {
    if (w.side1_edges.size() < 3 || w.side2_edges.size() < 3) return false;
    std::set<int> side1(w.side1_vertices.begin(), w.side1_vertices.end());
    std::set<int> side2(w.side2_vertices.begin(), w.side2_vertices.end());
    if (side1.empty() || side2.empty()) return false;
    for (int v : side1)
        if (side2.count(v) || v == w.a || v == w.b) return false;
    auto inside = [&](const VertexPair& e, const std::set<int>& side) {
        auto ok = [&](int x) { return x == w.a || x == w.b || side.count(x); };
        return ok(e.a) && ok(e.b);
    };
    std::set<VertexPair> e1(w.side1_edges.begin(), w.side1_edges.end());
    std::set<VertexPair> e2(w.side2_edges.begin(), w.side2_edges.end());
    if (e1.size() != w.side1_edges.size() || e2.size() != w.side2_edges.size()) return false;
    for (const VertexPair& e : e1)
        if (e2.count(e) || !inside(e, side1)) return false;
    for (const VertexPair& e : e2)
        if (!inside(e, side2)) return false;
    // Cover: every vertex and edge of g is on some side.
    if (side1.size() + side2.size() + 2 != static_cast<size_t>(g.vertex_count())) return false;
    if (e1.size() + e2.size() != static_cast<size_t>(g.edge_count())) return false;
    for (const VertexPair& e : g.edges())
        if (!e1.count(e) && !e2.count(e)) return false;
    return true;
}

}  // namespace oracles
