#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ccrit/connectivity.hpp"
#include "ccrit/graph.hpp"

namespace ccrit {

struct Violation {
    std::string kind;
    std::string detail;
};

struct HypothesisReport {
    bool is_simple = false;
    bool g_minus_uv_cubic = false;
    bool g_minus_uv_3connected = false;
    bool g_minus_uv_planar = false;
    bool g_nonplanar = false;
    bool guv_internally_3connected = false;
    bool neighbor_distinctness = false;

    std::array<int, 3> u_neighbors{-1, -1, -1};
    std::array<int, 3> v_neighbors{-1, -1, -1};

    std::vector<Violation> failures;
    std::optional<TwoSeparationWitness> separation_witness;  // when internal 3-connectivity fails
    std::vector<VertexPair> kuratowski_edges;                // when planarity of G-uv fails

    bool accepted() const {
        return is_simple && g_minus_uv_cubic && g_minus_uv_3connected && g_minus_uv_planar && g_nonplanar &&
               guv_internally_3connected && neighbor_distinctness;
    }
};

// Checks every hypothesis of the main construction on (g, uv): G simple and
// nonplanar, G-uv cubic polyhedral, G-{u,v} internally 3-connected, and the
// six terminal neighbors pairwise distinct. All checks are exact.
HypothesisReport validate_hypotheses(const SimpleGraph& g, const VertexPair& uv);

}  // namespace ccrit
