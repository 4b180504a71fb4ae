#pragma once

#include <array>
#include <string>
#include <vector>

#include "ccrit/synth.hpp"

namespace ccrit {

// Exact evaluation of Proposition-1 conditions (1)-(7) on a certificate,
// reading only the graph, the rotation, the anchor/tight faces and omega.
struct ConditionReport {
    bool balanced = false;  // (1)
    std::vector<int> unbalanced_core_edges;

    bool pair_product_ok = false;  // (2)
    Int pair_product_margin;       // min_{e != e'} w(e)w(e') - d(F_u,F_v)*t
    std::array<int, 2> min_core_edges{-1, -1};

    bool face_ineq_u_ok = false;  // (3)
    std::vector<Int> face_margin_u;
    bool tight_u_ok = false;  // (4)
    std::array<Int, 3> tight_residue_u{};
    std::array<bool, 3> tight_u_positive{};

    bool face_ineq_v_ok = false;  // (5)
    std::vector<Int> face_margin_v;
    bool tight_v_ok = false;  // (6)
    std::array<Int, 3> tight_residue_v{};
    std::array<bool, 3> tight_v_positive{};

    bool spoke_bound_ok = false;  // (7)
    std::array<std::array<Int, 3>, 3> spoke_margin9{};  // min core weight - 9*w(uu_i)w(vv_j)

    bool pass = false;

    std::string failing_summary() const;
};

// A dual walk: faces traversed implicitly, recorded as the crossed core
// edges in order from start_face to end_face.
struct DualWalk {
    int start_face = -1;
    int end_face = -1;
    std::vector<int> steps;  // core edge ids
};

// Combinatorial drawing of G over the fixed embedding of G_{u,v}: host
// faces for u and v, dual-walk routings for uv and the six spokes, and the
// declared spoke-spoke crossing pairs.
struct CombinatorialDrawing {
    int face_u = -1;
    int face_v = -1;
    DualWalk route_uv;
    std::array<DualWalk, 3> u_spokes;
    std::array<DualWalk, 3> v_spokes;
    std::vector<std::pair<int, int>> spoke_cross;  // (i,j) = uu_i x vv_j, once each
};

struct EdgeWitness {
    int g_edge = -1;
    CombinatorialDrawing drawing;
    Int count_full;
    Int count_reduced;
    bool strict = false;
};

struct CriticalityReport {
    Int cr_value;  // t * d(F_u, F_v) under omega*
    std::vector<EdgeWitness> witnesses;
    bool all_strict = false;
};

struct LowerBoundReport {
    bool induced_planarity_ok = false;  // condition (2) margins
    Int pair_margin;
    bool face_ineq_ok = false;  // conditions (3)/(5) over all faces
    bool triangle_ok = false;   // d(F_u,F') + d(F',F'') + d(F'',F_v) >= d(F_u,F_v)
    int min_pair_f1 = -1;
    int min_pair_f2 = -1;
    Int min_triangle_margin;
    bool pass = false;
};

ConditionReport check_conditions(const SynthesisCertificate& cert);

// Weighted crossing count of a drawing; validates walk consistency and the
// adjacent-crossing avoidance invariant. Throws MalformedDrawing.
Int count_crossings(const CoreContext& ctx, const CombinatorialDrawing& d, const IntegerWeighting& omega);

CombinatorialDrawing upper_bound_drawing(const CoreContext& ctx, const SynthesisCertificate& cert);

// Witness for a core edge or for uv itself (pass the g edge id).
EdgeWitness witness_core_edge(const CoreContext& ctx, const SynthesisCertificate& cert, int g_edge);

// Witness for spoke i on the given side.
EdgeWitness witness_spoke_edge(const CoreContext& ctx, const SynthesisCertificate& cert, Side side, int i);

LowerBoundReport lower_bound_certificate(const SynthesisCertificate& cert);

CriticalityReport certify_critical(const SynthesisCertificate& cert);

// Shared by synth/certify/io: context rebuilt deterministically from the
// certificate (uses the stored rotation).
CoreContext context_of_certificate(const SynthesisCertificate& cert);

}  // namespace ccrit
