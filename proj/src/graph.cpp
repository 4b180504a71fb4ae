#include "ccrit/graph.hpp"

#include <map>
#include <string>

namespace ccrit {

namespace {

void check_pair_range(const VertexPair& p, int n) {
    if (p.a < 0 || p.b >= n)
        throw Error(ErrorCode::InvalidEdge,
                    "edge (" + std::to_string(p.a) + "," + std::to_string(p.b) + ") out of range for " +
                        std::to_string(n) + " vertices");
}

}  // namespace

SimpleGraph::SimpleGraph(int vertex_count, std::vector<VertexPair> edges) : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) throw Error(ErrorCode::InvalidEdge, "negative vertex count");
    for (const VertexPair& p : edges_) {
        check_pair_range(p, n_);
        if (p.a == p.b) throw Error(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(p.a));
    }
    std::sort(edges_.begin(), edges_.end());
    for (size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw Error(ErrorCode::DuplicateEdge,
                        "(" + std::to_string(edges_[i].a) + "," + std::to_string(edges_[i].b) + ")");
    adj_.assign(n_, {});
    for (int e = 0; e < edge_count(); ++e) {
        adj_[edges_[e].a].push_back({edges_[e].b, e});
        adj_[edges_[e].b].push_back({edges_[e].a, e});
    }
    for (auto& lst : adj_) std::sort(lst.begin(), lst.end());
}

int SimpleGraph::edge_id(int x, int y) const {
    VertexPair p(x, y);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), p);
    if (it == edges_.end() || !(*it == p)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> SimpleGraph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(adj_[v].size());
    for (auto& [w, e] : adj_[v]) out.push_back(w);
    return out;
}

Multigraph::Multigraph(int vertex_count, std::vector<MultiEdgeClass> classes) : n_(vertex_count) {
    std::map<VertexPair, Int> merged;
    for (const MultiEdgeClass& c : classes) {
        check_pair_range(c.ends, n_);
        if (c.ends.a == c.ends.b) throw Error(ErrorCode::InvalidEdge, "loop at vertex " + std::to_string(c.ends.a));
        if (c.multiplicity < 1)
            throw Error(ErrorCode::InvalidEdge, "multiplicity must be >= 1 on (" + std::to_string(c.ends.a) + "," +
                                                    std::to_string(c.ends.b) + ")");
        merged[c.ends] += c.multiplicity;
    }
    classes_.reserve(merged.size());
    for (auto& [ends, mult] : merged) classes_.push_back({ends, mult});
}

Int Multigraph::edge_count_with_multiplicity() const {
    Int total = 0;
    for (const auto& c : classes_) total += c.multiplicity;
    return total;
}

bool Multigraph::equal_classes(const Multigraph& o) const {
    if (classes_.size() != o.classes_.size()) return false;
    for (size_t i = 0; i < classes_.size(); ++i)
        if (!(classes_[i].ends == o.classes_[i].ends) || classes_[i].multiplicity != o.classes_[i].multiplicity)
            return false;
    return true;
}

std::vector<std::vector<std::pair<int, int>>> MultiEdgeGraph::adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int e = 0; e < edge_count(); ++e) {
        adj[edges[e].a].push_back({edges[e].b, e});
        adj[edges[e].b].push_back({edges[e].a, e});
    }
    return adj;
}

SimpleGraph build_simple_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs) {
    std::vector<VertexPair> edges;
    edges.reserve(edge_pairs.size());
    for (auto& [x, y] : edge_pairs) edges.emplace_back(x, y);
    return SimpleGraph(vertex_count, std::move(edges));
}

std::pair<SimpleGraph, IntegerWeighting> multigraph_to_weighted(const Multigraph& m) {
    std::vector<VertexPair> edges;
    edges.reserve(m.classes().size());
    for (const auto& c : m.classes()) edges.push_back(c.ends);
    SimpleGraph g(m.vertex_count(), std::move(edges));
    IntegerWeighting w(g.edge_count());
    for (const auto& c : m.classes()) w[g.edge_id(c.ends.a, c.ends.b)] = c.multiplicity;
    return {std::move(g), std::move(w)};
}

Multigraph weighted_to_multigraph(const SimpleGraph& g, const IntegerWeighting& w) {
    if (static_cast<int>(w.size()) != g.edge_count())
        throw Error(ErrorCode::IncompleteWeighting, "weighting covers " + std::to_string(w.size()) + " of " +
                                                        std::to_string(g.edge_count()) + " edges");
    require_positive_weights(w, g.edge_count());
    std::vector<MultiEdgeClass> classes;
    classes.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) classes.push_back({g.edge(e), w[e]});
    return Multigraph(g.vertex_count(), std::move(classes));
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw Error(ErrorCode::InvalidEdge, "permutation size mismatch");
    std::vector<VertexPair> edges;
    edges.reserve(g.edge_count());
    for (const VertexPair& e : g.edges()) edges.emplace_back(perm[e.a], perm[e.b]);
    return SimpleGraph(g.vertex_count(), std::move(edges));
}

void require_positive_weights(const IntegerWeighting& w, int edge_count) {
    if (static_cast<int>(w.size()) != edge_count)
        throw Error(ErrorCode::IncompleteWeighting, "weighting covers " + std::to_string(w.size()) + " of " +
                                                        std::to_string(edge_count) + " edges");
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] < 1)
            throw Error(ErrorCode::IncompleteWeighting, "weight of edge " + std::to_string(i) + " must be >= 1");
}

}  // namespace ccrit
