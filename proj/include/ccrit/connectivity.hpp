#pragma once

#include <optional>
#include <vector>

#include "ccrit/graph.hpp"

namespace ccrit {

bool is_connected(const MultiEdgeGraph& g);
bool is_connected(const SimpleGraph& g);

// 2-connected in the multigraph sense: connected, >= 2 vertices, >= 1 edge,
// no cut vertex. Two vertices joined by any number of edges qualify.
bool is_two_connected(const MultiEdgeGraph& g);

// Exact vertex connectivity >= k, by counting internally disjoint paths
// (unit-capacity max-flow on the split graph) between vertex pairs.
bool vertex_connectivity_at_least(const SimpleGraph& g, int k);

// A separation (G1,G2) of order two violating internal 3-connectivity:
// V(G1) ∩ V(G2) = {a,b} and both sides have >= 3 edges.
struct TwoSeparationWitness {
    int a = -1;
    int b = -1;
    std::vector<int> side1_vertices;  // excluding a, b
    std::vector<int> side2_vertices;
    std::vector<VertexPair> side1_edges;
    std::vector<VertexPair> side2_edges;
};

// Simple + 2-connected + every order-2 separation has a side with <= 2 edges,
// checked by exhaustive pair enumeration. On failure the witness names the
// violating separation.
bool is_internally_three_connected(const SimpleGraph& g, std::optional<TwoSeparationWitness>* witness = nullptr);

}  // namespace ccrit
