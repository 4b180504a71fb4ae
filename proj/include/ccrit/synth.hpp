#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ccrit/balance.hpp"
#include "ccrit/embed.hpp"
#include "ccrit/graph.hpp"
#include "ccrit/hypotheses.hpp"

namespace ccrit {

// Everything derived deterministically from (g, uv): the core graph
// G_{u,v}, its unique embedding, faces, dual and anchor faces. Shared by
// synthesis and certification so both sides agree on ids.
struct CoreContext {
    SimpleGraph g;
    VertexPair uv;
    std::array<int, 3> u_neighbors_g{};  // in g ids
    std::array<int, 3> v_neighbors_g{};

    SimpleGraph core;                  // G_{u,v}
    std::vector<int> core_of_g;        // g vertex -> core vertex (-1 for u,v)
    std::vector<int> g_of_core;        // core vertex -> g vertex
    std::vector<int> core_edge_of_g;   // g edge -> core edge (-1 for uv and spokes)
    std::vector<int> g_edge_of_core;   // core edge -> g edge

    RotationSystem rotation;
    FaceSet face_set;
    DualGraph dual;
    AnchorFaces anchors;

    int spoke_edge_u(int i) const;  // g edge id of uu_i
    int spoke_edge_v(int i) const;  // g edge id of vv_i
    int uv_edge() const;            // g edge id of uv
};

// Builds the context; the caller guarantees the hypotheses (neighbor triples
// come from a passing HypothesisReport). An explicit core rotation (as
// neighbor orders) replaces the computed embedding when replaying documents.
CoreContext make_core_context(const SimpleGraph& g, const VertexPair& uv, const std::array<int, 3>& u_nbrs,
                              const std::array<int, 3>& v_nbrs,
                              const std::optional<std::vector<std::vector<int>>>& core_rotation = std::nullopt);

enum class Side { U, V };

// One row per face F != F_base: coefficients d(w_i,F), right-hand side
// d(F_base,F). The Gamma rows are those of the faces F_{w_1..3}.
struct InequalityRow {
    int face = -1;
    std::array<Int, 3> coeff{};
    Int rhs;
};

struct InequalitySystem {
    Side side = Side::U;
    int base_face = -1;
    std::array<int, 3> w_faces{};  // F_{w_i}
    std::vector<InequalityRow> rows;
    std::array<int, 3> gamma_row{};  // indices into rows

    const InequalityRow& row_of_face(int face) const;
};

struct ClaimPoint {
    std::array<Rat, 3> x{};
    std::array<int, 3> tight_faces{};  // U_i (or V_i)
};

struct SynthesisCertificate {
    SimpleGraph g;
    VertexPair uv;
    std::array<int, 3> u_neighbors{};  // g ids
    std::array<int, 3> v_neighbors{};
    std::vector<std::vector<int>> core_rotation;  // neighbor orders, core ids

    IntegerWeighting mu;                     // on core edges
    std::vector<std::vector<Int>> dist_mu;   // face distances under mu*
    ClaimPoint claim_u, claim_v;
    Int m;                                   // omega(uv)
    std::array<Int, 3> r{}, s{};
    Int c;
    IntegerWeighting omega;                  // on g edges
};

InequalitySystem build_inequality_system(const DistanceTable& dt, Side side);

// The constructive point of Claim I/II: a positive rational point on the
// Gamma1∩Gamma2 line, then the ray sweep along x_1; tightness and
// feasibility are asserted exactly before returning.
ClaimPoint claim_point(const InequalitySystem& sys);

struct Integerized {
    Int m;
    std::array<Int, 3> r{}, s{};
};

Integerized integerize(const ClaimPoint& p_u, const ClaimPoint& p_v);

Int choose_c(const Int& m, const Int& d_fu_fv, const Int& min_mu, const std::array<Int, 3>& r,
             const std::array<Int, 3>& s);

// Full pipeline; requires validate_hypotheses(g, uv) to accept.
SynthesisCertificate synthesize(const SimpleGraph& g, const VertexPair& uv, int max_perturb_rounds = 32);

}  // namespace ccrit
