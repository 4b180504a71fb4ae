#pragma once

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "ccrit/error.hpp"
#include "ccrit/numeric.hpp"

namespace ccrit {

// Edges are stored canonically as (min,max) vertex pairs; vertex ids are
// dense integers 0..n-1. Edge ids are positions in the sorted edge list, so
// a given (vertex_count, edge set) always serializes the same way.
struct VertexPair {
    int a = -1;
    int b = -1;

    VertexPair() = default;
    VertexPair(int x, int y) : a(std::min(x, y)), b(std::max(x, y)) {}

    bool operator==(const VertexPair& o) const = default;
    auto operator<=>(const VertexPair& o) const = default;
};

class SimpleGraph {
  public:
    SimpleGraph() = default;
    SimpleGraph(int vertex_count, std::vector<VertexPair> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const VertexPair& edge(int e) const { return edges_[e]; }

    // -1 when absent.
    int edge_id(int x, int y) const;
    bool has_edge(int x, int y) const { return edge_id(x, y) >= 0; }

    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    // (neighbor, edge id) pairs in neighbor order.
    const std::vector<std::pair<int, int>>& incident(int v) const { return adj_[v]; }
    std::vector<int> neighbors(int v) const;

    bool operator==(const SimpleGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Loopless multigraph given by edge classes with positive multiplicities.
struct MultiEdgeClass {
    VertexPair ends;
    Int multiplicity;
};

class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<MultiEdgeClass> classes);

    int vertex_count() const { return n_; }
    const std::vector<MultiEdgeClass>& classes() const { return classes_; }
    Int edge_count_with_multiplicity() const;

    bool operator==(const Multigraph& o) const { return n_ == o.n_ && equal_classes(o); }

  private:
    bool equal_classes(const Multigraph& o) const;

    int n_ = 0;
    std::vector<MultiEdgeClass> classes_;  // sorted by ends, merged
};

// Plain edge list with parallel edges allowed and edge ids significant.
// This is the common currency for duals, Dijkstra, and the balance module.
struct MultiEdgeGraph {
    int n = 0;
    std::vector<VertexPair> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    std::vector<std::vector<std::pair<int, int>>> adjacency() const;
};

// Positive integer weights indexed by edge id of the owning graph.
using IntegerWeighting = std::vector<Int>;
// Positive rational weights (internal to balance/synth only).
using RationalWeighting = std::vector<Rat>;

SimpleGraph build_simple_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs);

// Section-3 equivalence: multiplicities become weights and back.
std::pair<SimpleGraph, IntegerWeighting> multigraph_to_weighted(const Multigraph& m);
Multigraph weighted_to_multigraph(const SimpleGraph& g, const IntegerWeighting& w);

// Applies a vertex permutation: vertex v of the input becomes perm[v].
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm);

void require_positive_weights(const IntegerWeighting& w, int edge_count);

}  // namespace ccrit
