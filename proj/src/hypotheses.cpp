#include "ccrit/hypotheses.hpp"

#include <algorithm>

#include "ccrit/embed.hpp"

namespace ccrit {

namespace {

SimpleGraph remove_edge(const SimpleGraph& g, const VertexPair& uv) {
    std::vector<VertexPair> edges;
    edges.reserve(g.edge_count() - 1);
    for (const VertexPair& e : g.edges())
        if (!(e == uv)) edges.push_back(e);
    return SimpleGraph(g.vertex_count(), std::move(edges));
}

SimpleGraph remove_two_vertices(const SimpleGraph& g, int u, int v, std::vector<int>* old_of_new) {
    std::vector<int> map(g.vertex_count(), -1);
    int next = 0;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (x == u || x == v) continue;
        map[x] = next++;
        if (old_of_new) old_of_new->push_back(x);
    }
    std::vector<VertexPair> edges;
    for (const VertexPair& e : g.edges())
        if (map[e.a] >= 0 && map[e.b] >= 0) edges.emplace_back(map[e.a], map[e.b]);
    return SimpleGraph(next, std::move(edges));
}

}  // namespace

HypothesisReport validate_hypotheses(const SimpleGraph& g, const VertexPair& uv) {
    HypothesisReport r;
    if (g.edge_id(uv.a, uv.b) < 0)
        throw Error(ErrorCode::MissingEdge, "(" + std::to_string(uv.a) + "," + std::to_string(uv.b) + ")");

    // SimpleGraph construction already rejects loops and duplicates.
    r.is_simple = true;

    SimpleGraph g_minus = remove_edge(g, uv);

    r.g_minus_uv_cubic = true;
    for (int v = 0; v < g_minus.vertex_count(); ++v) {
        if (g_minus.degree(v) != 3) {
            r.g_minus_uv_cubic = false;
            r.failures.push_back({"NotCubic", "vertex " + std::to_string(v) + " has degree " +
                                                  std::to_string(g_minus.degree(v)) + " in G-uv"});
            break;
        }
    }

    r.g_minus_uv_3connected = vertex_connectivity_at_least(g_minus, 3);
    if (!r.g_minus_uv_3connected) r.failures.push_back({"NotThreeConnected", "G-uv is not 3-connected"});

    PlanarityCheck pc_minus = check_planarity(g_minus);
    r.g_minus_uv_planar = pc_minus.planar;
    if (!pc_minus.planar) {
        r.kuratowski_edges = pc_minus.kuratowski_edges;
        r.failures.push_back({"GMinusUvNotPlanar", "G-uv contains a Kuratowski subdivision"});
    }

    PlanarityCheck pc_g = check_planarity(g);
    r.g_nonplanar = !pc_g.planar;
    if (pc_g.planar) r.failures.push_back({"GPlanar", "G itself is planar; nothing to make critical"});

    if (r.g_minus_uv_cubic) {
        int iu = 0, iv = 0;
        for (auto& [w, e] : g.incident(uv.a))
            if (w != uv.b) r.u_neighbors[iu++] = w;
        for (auto& [w, e] : g.incident(uv.b))
            if (w != uv.a) r.v_neighbors[iv++] = w;
        std::vector<int> six(r.u_neighbors.begin(), r.u_neighbors.end());
        six.insert(six.end(), r.v_neighbors.begin(), r.v_neighbors.end());
        std::sort(six.begin(), six.end());
        r.neighbor_distinctness = std::adjacent_find(six.begin(), six.end()) == six.end();
        if (!r.neighbor_distinctness)
            r.failures.push_back({"NeighborsNotDistinct", "the six terminal neighbors are not pairwise distinct"});
    } else {
        r.failures.push_back({"NeighborsUndefined", "terminal neighbor triples require G-uv cubic"});
    }

    SimpleGraph core = remove_two_vertices(g, uv.a, uv.b, nullptr);
    std::optional<TwoSeparationWitness> witness;
    r.guv_internally_3connected = is_internally_three_connected(core, &witness);
    if (!r.guv_internally_3connected) {
        if (witness) {
            // Witness vertices are in core numbering; translate back to G.
            std::vector<int> old_of_new;
            remove_two_vertices(g, uv.a, uv.b, &old_of_new);
            TwoSeparationWitness w = *witness;
            auto lift = [&](int x) { return old_of_new[x]; };
            w.a = lift(w.a);
            w.b = lift(w.b);
            for (int& x : w.side1_vertices) x = lift(x);
            for (int& x : w.side2_vertices) x = lift(x);
            for (VertexPair& e : w.side1_edges) e = VertexPair(lift(e.a), lift(e.b));
            for (VertexPair& e : w.side2_edges) e = VertexPair(lift(e.a), lift(e.b));
            r.separation_witness = std::move(w);
            r.failures.push_back(
                {"NotInternallyThreeConnected",
                 "G-{u,v} has an order-2 separation at {" + std::to_string(r.separation_witness->a) + "," +
                     std::to_string(r.separation_witness->b) + "} with " +
                     std::to_string(r.separation_witness->side1_edges.size()) + " and " +
                     std::to_string(r.separation_witness->side2_edges.size()) + " edges on the sides"});
        } else {
            r.failures.push_back({"NotInternallyThreeConnected", "G-{u,v} is not simple/2-connected"});
        }
    }

    return r;
}

}  // namespace ccrit
