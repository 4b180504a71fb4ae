#include "ccrit/certify.hpp"

#include <algorithm>
#include <set>

namespace ccrit {

namespace {

IntegerWeighting core_weights(const CoreContext& ctx, const IntegerWeighting& omega) {
    IntegerWeighting w(ctx.core.edge_count());
    for (int ce = 0; ce < ctx.core.edge_count(); ++ce) w[ce] = omega[ctx.g_edge_of_core[ce]];
    return w;
}

Int min_core_weight(const IntegerWeighting& w_core) {
    return *std::min_element(w_core.begin(), w_core.end());
}

// Dual walk A -> B recovered from a Dijkstra run rooted at A.
DualWalk recover_walk(const CoreContext& ctx, const ShortestPaths& sp, int from, int to) {
    DualWalk walk;
    walk.start_face = from;
    walk.end_face = to;
    int cur = to;
    std::vector<int> rev;
    while (cur != from) {
        int e = sp.pred_edge[cur];
        if (e < 0) throw Error(ErrorCode::CertificationFailed, "walk recovery failed");
        rev.push_back(e);
        const VertexPair& de = ctx.dual.graph.edges[e];
        cur = de.a == cur ? de.b : de.a;
    }
    walk.steps.assign(rev.rbegin(), rev.rend());
    return walk;
}

std::vector<bool> edges_at_core_vertex(const CoreContext& ctx, int core_vertex) {
    std::vector<bool> forbidden(ctx.core.edge_count(), false);
    for (auto& [w, e] : ctx.core.incident(core_vertex)) forbidden[e] = true;
    return forbidden;
}

Int walk_weight(const CoreContext& ctx, const DualWalk& walk, const IntegerWeighting& omega) {
    Int total = 0;
    for (int e : walk.steps) total += omega[ctx.g_edge_of_core[e]];
    return total;
}

void validate_walk(const CoreContext& ctx, const DualWalk& walk, int avoid_core_vertex) {
    int cur = walk.start_face;
    for (int e : walk.steps) {
        if (e < 0 || e >= ctx.core.edge_count()) throw Error(ErrorCode::MalformedDrawing, "walk step out of range");
        const VertexPair& de = ctx.dual.graph.edges[e];
        if (de.a != cur && de.b != cur)
            throw Error(ErrorCode::MalformedDrawing, "walk step does not leave the current face");
        cur = de.a == cur ? de.b : de.a;
        if (avoid_core_vertex >= 0) {
            const VertexPair& pe = ctx.core.edge(e);
            if (pe.a == avoid_core_vertex || pe.b == avoid_core_vertex)
                throw Error(ErrorCode::MalformedDrawing, "walk crosses an edge adjacent to the routed edge");
        }
    }
    if (cur != walk.end_face) throw Error(ErrorCode::MalformedDrawing, "walk does not reach its end face");
}

DualWalk empty_walk(int face) { return DualWalk{face, face, {}}; }

}  // namespace

std::string ConditionReport::failing_summary() const {
    std::string out;
    auto add = [&](bool ok, const char* name) {
        if (!ok) {
            if (!out.empty()) out += ", ";
            out += name;
        }
    };
    add(balanced, "(1) balancedness");
    add(pair_product_ok, "(2) edge-pair product");
    add(face_ineq_u_ok, "(3) u-side face inequalities");
    add(tight_u_ok, "(4) u-side tight faces");
    add(face_ineq_v_ok, "(5) v-side face inequalities");
    add(tight_v_ok, "(6) v-side tight faces");
    add(spoke_bound_ok, "(7) spoke product bound");
    if (out.empty()) out = "nothing";
    return out;
}

CoreContext context_of_certificate(const SynthesisCertificate& cert) {
    std::optional<std::vector<std::vector<int>>> rot;
    if (!cert.core_rotation.empty()) rot = cert.core_rotation;
    return make_core_context(cert.g, cert.uv, cert.u_neighbors, cert.v_neighbors, rot);
}

ConditionReport check_conditions(const SynthesisCertificate& cert) {
    CoreContext ctx = context_of_certificate(cert);
    require_positive_weights(cert.omega, cert.g.edge_count());
    const Int t = cert.omega[ctx.uv_edge()];

    IntegerWeighting w_core = core_weights(ctx, cert.omega);
    IntegerWeighting omega_star = transfer_weights(w_core, ctx.dual);
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);

    ConditionReport rep;

    // (1) balancedness of omega* between F_u and F_v.
    BalanceReport bal = verify_balanced(ctx.dual.graph, omega_star, ctx.anchors.f_u, ctx.anchors.f_v);
    rep.balanced = bal.balanced;
    rep.unbalanced_core_edges = bal.failing_edges;

    // (2) every pair product beats d(F_u,F_v)*t; the two smallest weights
    // decide.
    {
        int e1 = -1, e2 = -1;
        for (int ce = 0; ce < ctx.core.edge_count(); ++ce) {
            if (e1 < 0 || w_core[ce] < w_core[e1]) {
                e2 = e1;
                e1 = ce;
            } else if (e2 < 0 || w_core[ce] < w_core[e2]) {
                e2 = ce;
            }
        }
        rep.min_core_edges = {e1, e2};
        rep.pair_product_margin = w_core[e1] * w_core[e2] - dt.d(ctx.anchors.f_u, ctx.anchors.f_v) * t;
        rep.pair_product_ok = rep.pair_product_margin > 0;
    }

    auto side_checks = [&](Side side, std::vector<Int>& margins, bool& ineq_ok, const std::array<int, 3>& tight,
                           std::array<Int, 3>& residue, std::array<bool, 3>& positive, bool& tight_ok) {
        int base = side == Side::U ? ctx.anchors.f_u : ctx.anchors.f_v;
        auto term = [&](int i, int f) -> const Int& { return side == Side::U ? dt.du(i, f) : dt.dv(i, f); };
        auto spoke = [&](int i) {
            return side == Side::U ? cert.omega[ctx.spoke_edge_u(i)] : cert.omega[ctx.spoke_edge_v(i)];
        };
        ineq_ok = true;
        margins.resize(dt.face_count());
        for (int f = 0; f < dt.face_count(); ++f) {
            Int lhs = 0;
            for (int i = 0; i < 3; ++i) lhs += term(i, f) * spoke(i);
            margins[f] = lhs - dt.d(base, f) * t;
            if (margins[f] < 0) ineq_ok = false;
        }
        tight_ok = true;
        for (int i = 0; i < 3; ++i) {
            int f = tight[i];
            if (f < 0 || f >= dt.face_count()) {
                tight_ok = false;
                continue;
            }
            Int lhs = 0;
            for (int j = 0; j < 3; ++j) lhs += term(j, f) * spoke(j);
            residue[i] = lhs - dt.d(base, f) * t;
            positive[i] = term(i, f) > 0;
            if (residue[i] != 0 || !positive[i]) tight_ok = false;
        }
    };

    side_checks(Side::U, rep.face_margin_u, rep.face_ineq_u_ok, cert.claim_u.tight_faces, rep.tight_residue_u,
                rep.tight_u_positive, rep.tight_u_ok);
    side_checks(Side::V, rep.face_margin_v, rep.face_ineq_v_ok, cert.claim_v.tight_faces, rep.tight_residue_v,
                rep.tight_v_positive, rep.tight_v_ok);

    // (7) strict: 9*w(uu_i)*w(vv_j) < min core weight, all nine pairs.
    {
        Int min_core = min_core_weight(w_core);
        rep.spoke_bound_ok = true;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                rep.spoke_margin9[i][j] =
                    min_core - 9 * cert.omega[ctx.spoke_edge_u(i)] * cert.omega[ctx.spoke_edge_v(j)];
                if (rep.spoke_margin9[i][j] <= 0) rep.spoke_bound_ok = false;
            }
    }

    rep.pass = rep.balanced && rep.pair_product_ok && rep.face_ineq_u_ok && rep.tight_u_ok && rep.face_ineq_v_ok &&
               rep.tight_v_ok && rep.spoke_bound_ok;
    return rep;
}

Int count_crossings(const CoreContext& ctx, const CombinatorialDrawing& d, const IntegerWeighting& omega) {
    // Hosts must be faces; spoke walks start at their host and end at a face
    // incident with the spoke's core endpoint.
    int nf = ctx.dual.graph.n;
    if (d.face_u < 0 || d.face_u >= nf || d.face_v < 0 || d.face_v >= nf)
        throw Error(ErrorCode::MalformedDrawing, "host face out of range");
    if (d.route_uv.start_face != d.face_u || d.route_uv.end_face != d.face_v)
        throw Error(ErrorCode::MalformedDrawing, "uv route does not join the host faces");
    validate_walk(ctx, d.route_uv, -1);

    for (int i = 0; i < 3; ++i) {
        int u_i = ctx.core_of_g[ctx.u_neighbors_g[i]];
        int v_i = ctx.core_of_g[ctx.v_neighbors_g[i]];
        if (d.u_spokes[i].start_face != d.face_u || d.v_spokes[i].start_face != d.face_v)
            throw Error(ErrorCode::MalformedDrawing, "spoke walk does not start at its host face");
        auto incident_faces = [&](int cv) { return ctx.face_set.faces_at_vertex(cv); };
        auto ends_ok = [&](const DualWalk& w, int cv) {
            auto fs = incident_faces(cv);
            return std::find(fs.begin(), fs.end(), w.end_face) != fs.end();
        };
        if (!ends_ok(d.u_spokes[i], u_i) || !ends_ok(d.v_spokes[i], v_i))
            throw Error(ErrorCode::MalformedDrawing, "spoke walk does not end at its terminal neighbor");
        validate_walk(ctx, d.u_spokes[i], u_i);
        validate_walk(ctx, d.v_spokes[i], v_i);
    }
    std::set<std::pair<int, int>> seen;
    for (auto& [i, j] : d.spoke_cross) {
        if (i < 0 || i > 2 || j < 0 || j > 2) throw Error(ErrorCode::MalformedDrawing, "spoke_cross index out of range");
        if (!seen.insert({i, j}).second) throw Error(ErrorCode::MalformedDrawing, "spoke_cross pair repeated");
    }

    Int total = omega[ctx.uv_edge()] * walk_weight(ctx, d.route_uv, omega);
    for (int i = 0; i < 3; ++i) {
        total += omega[ctx.spoke_edge_u(i)] * walk_weight(ctx, d.u_spokes[i], omega);
        total += omega[ctx.spoke_edge_v(i)] * walk_weight(ctx, d.v_spokes[i], omega);
    }
    for (auto& [i, j] : d.spoke_cross) total += omega[ctx.spoke_edge_u(i)] * omega[ctx.spoke_edge_v(j)];
    return total;
}

CombinatorialDrawing upper_bound_drawing(const CoreContext& ctx, const SynthesisCertificate& cert) {
    IntegerWeighting omega_star = core_weights(ctx, cert.omega);
    ShortestPaths sp = dijkstra(ctx.dual.graph, omega_star, ctx.anchors.f_u);

    CombinatorialDrawing d;
    d.face_u = ctx.anchors.f_u;
    d.face_v = ctx.anchors.f_v;
    d.route_uv = recover_walk(ctx, sp, ctx.anchors.f_u, ctx.anchors.f_v);
    for (int i = 0; i < 3; ++i) {
        d.u_spokes[i] = empty_walk(ctx.anchors.f_u);
        d.v_spokes[i] = empty_walk(ctx.anchors.f_v);
    }
    return d;
}

EdgeWitness witness_core_edge(const CoreContext& ctx, const SynthesisCertificate& cert, int g_edge) {
    IntegerWeighting omega_star = core_weights(ctx, cert.omega);
    const Int t = cert.omega[ctx.uv_edge()];
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);
    const Int cr = t * dt.d(ctx.anchors.f_u, ctx.anchors.f_v);

    EdgeWitness w;
    w.g_edge = g_edge;

    if (g_edge == ctx.uv_edge()) {
        w.drawing = upper_bound_drawing(ctx, cert);
        w.count_full = count_crossings(ctx, w.drawing, cert.omega);
        IntegerWeighting reduced = cert.omega;
        reduced[g_edge] -= 1;
        // Weight 0 counts as deletion; the product form already encodes it.
        w.count_reduced = count_crossings(ctx, w.drawing, reduced);
        if (w.count_reduced != w.count_full - walk_weight(ctx, w.drawing.route_uv, cert.omega))
            throw Error(ErrorCode::CertificationFailed, "uv decrement did not reduce the count by d(F_u,F_v)");
        w.strict = w.count_reduced < cr;
        return w;
    }

    int ce = ctx.core_edge_of_g[g_edge];
    if (ce < 0) throw Error(ErrorCode::CertificationFailed, "witness_core_edge wants a core edge or uv");

    // A shortest F_u F_v path through e*: split at the dual endpoints of e*
    // with e* itself forbidden in the side legs (shortest paths are simple).
    std::vector<bool> forbidden(ctx.core.edge_count(), false);
    forbidden[ce] = true;
    ShortestPaths from_fu = dijkstra(ctx.dual.graph, omega_star, ctx.anchors.f_u, &forbidden);
    ShortestPaths from_fv = dijkstra(ctx.dual.graph, omega_star, ctx.anchors.f_v, &forbidden);
    const VertexPair& de = ctx.dual.graph.edges[ce];

    const Int d_fu_fv = dt.d(ctx.anchors.f_u, ctx.anchors.f_v);
    Int via_ab = (from_fu.reached[de.a] && from_fv.reached[de.b])
                     ? from_fu.dist[de.a] + omega_star[ce] + from_fv.dist[de.b]
                     : Int(-1);
    Int via_ba = (from_fu.reached[de.b] && from_fv.reached[de.a])
                     ? from_fu.dist[de.b] + omega_star[ce] + from_fv.dist[de.a]
                     : Int(-1);

    int enter, exit_;
    if (via_ab == d_fu_fv) {
        enter = de.a;
        exit_ = de.b;
    } else if (via_ba == d_fu_fv) {
        enter = de.b;
        exit_ = de.a;
    } else {
        throw Error(ErrorCode::BalancednessViolated,
                    "no shortest F_u F_v path passes through dual edge " + std::to_string(ce));
    }

    CombinatorialDrawing d;
    d.face_u = ctx.anchors.f_u;
    d.face_v = ctx.anchors.f_v;
    DualWalk head = recover_walk(ctx, from_fu, ctx.anchors.f_u, enter);
    DualWalk tail = recover_walk(ctx, from_fv, ctx.anchors.f_v, exit_);
    d.route_uv.start_face = ctx.anchors.f_u;
    d.route_uv.end_face = ctx.anchors.f_v;
    d.route_uv.steps = head.steps;
    d.route_uv.steps.push_back(ce);
    d.route_uv.steps.insert(d.route_uv.steps.end(), tail.steps.rbegin(), tail.steps.rend());
    for (int i = 0; i < 3; ++i) {
        d.u_spokes[i] = empty_walk(ctx.anchors.f_u);
        d.v_spokes[i] = empty_walk(ctx.anchors.f_v);
    }

    w.drawing = d;
    w.count_full = count_crossings(ctx, d, cert.omega);
    if (w.count_full != cr)
        throw Error(ErrorCode::CertificationFailed, "core witness does not realize the crossing number");
    IntegerWeighting reduced = cert.omega;
    reduced[g_edge] -= 1;
    w.count_reduced = count_crossings(ctx, d, reduced);
    if (w.count_reduced != cr - t)
        throw Error(ErrorCode::CertificationFailed, "core decrement did not reduce the count by t");
    w.strict = w.count_reduced < cr;
    return w;
}

EdgeWitness witness_spoke_edge(const CoreContext& ctx, const SynthesisCertificate& cert, Side side, int i) {
    IntegerWeighting omega_star = core_weights(ctx, cert.omega);
    const Int t = cert.omega[ctx.uv_edge()];
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);
    const Int cr = t * dt.d(ctx.anchors.f_u, ctx.anchors.f_v);
    const Int min_core = min_core_weight(omega_star);

    const bool u_side = side == Side::U;
    const std::array<int, 3>& tight = u_side ? cert.claim_u.tight_faces : cert.claim_v.tight_faces;
    int host = tight[i];
    int other_anchor = u_side ? ctx.anchors.f_v : ctx.anchors.f_u;
    int own_anchor = u_side ? ctx.anchors.f_u : ctx.anchors.f_v;
    auto term = [&](int j, int f) -> const Int& { return u_side ? dt.du(j, f) : dt.dv(j, f); };
    auto spoke_g_edge = [&](int j) { return u_side ? ctx.spoke_edge_u(j) : ctx.spoke_edge_v(j); };
    auto nbr_core = [&](int j) {
        return ctx.core_of_g[u_side ? ctx.u_neighbors_g[j] : ctx.v_neighbors_g[j]];
    };

    // Recheck the tightness equality of the hosting face before drawing.
    {
        Int lhs = 0;
        for (int j = 0; j < 3; ++j) lhs += term(j, host) * cert.omega[spoke_g_edge(j)];
        if (lhs != dt.d(own_anchor, host) * t || term(i, host) <= 0)
            throw Error(ErrorCode::ClaimProofMismatch,
                        "tight face " + std::to_string(host) + " fails the equality recheck");
    }

    ShortestPaths from_host = dijkstra(ctx.dual.graph, omega_star, host);

    CombinatorialDrawing d;
    d.face_u = u_side ? host : ctx.anchors.f_u;
    d.face_v = u_side ? ctx.anchors.f_v : host;
    d.route_uv = [&] {
        DualWalk w0 = recover_walk(ctx, from_host, host, other_anchor);
        if (!u_side) {
            // route is stored from face_u to face_v
            std::reverse(w0.steps.begin(), w0.steps.end());
            std::swap(w0.start_face, w0.end_face);
        }
        return w0;
    }();

    std::array<DualWalk, 3>& own_spokes = u_side ? d.u_spokes : d.v_spokes;
    std::array<DualWalk, 3>& far_spokes = u_side ? d.v_spokes : d.u_spokes;
    for (int j = 0; j < 3; ++j) far_spokes[j] = empty_walk(other_anchor);

    for (int j = 0; j < 3; ++j) {
        // Route spoke j from the host to whichever of its two faces realizes
        // d(w_j, host), avoiding the two core edges at the terminal neighbor.
        std::vector<bool> forbidden = edges_at_core_vertex(ctx, nbr_core(j));
        ShortestPaths sp = dijkstra(ctx.dual.graph, omega_star, host, &forbidden);
        int f1 = own_anchor;
        int f2 = u_side ? ctx.anchors.f_u_i[j] : ctx.anchors.f_v_i[j];
        Int d1 = sp.reached[f1] ? sp.dist[f1] : Int(-1);
        Int d2 = sp.reached[f2] ? sp.dist[f2] : Int(-1);
        int target;
        if (d1 >= 0 && d1 == term(j, host))
            target = f1;
        else if (d2 >= 0 && d2 == term(j, host))
            target = f2;
        else
            throw Error(ErrorCode::CertificationFailed,
                        "no adjacent-avoiding walk realizes d(w_" + std::to_string(j + 1) + ", host)");
        own_spokes[j] = recover_walk(ctx, sp, host, target);
    }

    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) d.spoke_cross.push_back({a, b});

    EdgeWitness w;
    w.g_edge = spoke_g_edge(i);
    w.drawing = d;
    w.count_full = count_crossings(ctx, d, cert.omega);
    if (w.count_full >= cr + min_core)
        throw Error(ErrorCode::CertificationFailed, "spoke witness exceeds cr + min core weight");
    IntegerWeighting reduced = cert.omega;
    reduced[w.g_edge] -= 1;
    // A zero weight deletes the edge; its walk and crossings vanish from the
    // product form automatically.
    w.count_reduced = count_crossings(ctx, d, reduced);
    w.strict = w.count_reduced < cr;
    return w;
}

LowerBoundReport lower_bound_certificate(const SynthesisCertificate& cert) {
    CoreContext ctx = context_of_certificate(cert);
    ConditionReport cond = check_conditions(cert);

    IntegerWeighting omega_star = core_weights(ctx, cert.omega);
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);

    LowerBoundReport rep;
    rep.induced_planarity_ok = cond.pair_product_ok;
    rep.pair_margin = cond.pair_product_margin;
    rep.face_ineq_ok = cond.face_ineq_u_ok && cond.face_ineq_v_ok;

    // Triangle pillar over every face pair; (F_u, F_v) achieves equality, so
    // with strict replacement it is also the echoed minimizer.
    const Int d_uv = dt.d(ctx.anchors.f_u, ctx.anchors.f_v);
    rep.min_pair_f1 = ctx.anchors.f_u;
    rep.min_pair_f2 = ctx.anchors.f_v;
    rep.min_triangle_margin = 0;
    rep.triangle_ok = true;
    for (int f1 = 0; f1 < dt.face_count(); ++f1)
        for (int f2 = 0; f2 < dt.face_count(); ++f2) {
            Int margin = dt.d(ctx.anchors.f_u, f1) + dt.d(f1, f2) + dt.d(f2, ctx.anchors.f_v) - d_uv;
            if (margin < 0) rep.triangle_ok = false;
            if (margin < rep.min_triangle_margin) {
                rep.min_triangle_margin = margin;
                rep.min_pair_f1 = f1;
                rep.min_pair_f2 = f2;
            }
        }

    rep.pass = rep.induced_planarity_ok && rep.face_ineq_ok && rep.triangle_ok;
    return rep;
}

CriticalityReport certify_critical(const SynthesisCertificate& cert) {
    CoreContext ctx = context_of_certificate(cert);
    IntegerWeighting omega_star = core_weights(ctx, cert.omega);
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);
    const Int t = cert.omega[ctx.uv_edge()];

    CriticalityReport rep;
    rep.cr_value = t * dt.d(ctx.anchors.f_u, ctx.anchors.f_v);

    std::array<int, 3> u_spoke_edges{}, v_spoke_edges{};
    for (int i = 0; i < 3; ++i) {
        u_spoke_edges[i] = ctx.spoke_edge_u(i);
        v_spoke_edges[i] = ctx.spoke_edge_v(i);
    }

    for (int e = 0; e < cert.g.edge_count(); ++e) {
        EdgeWitness w;
        auto u_it = std::find(u_spoke_edges.begin(), u_spoke_edges.end(), e);
        auto v_it = std::find(v_spoke_edges.begin(), v_spoke_edges.end(), e);
        if (e == ctx.uv_edge() || ctx.core_edge_of_g[e] >= 0)
            w = witness_core_edge(ctx, cert, e);
        else if (u_it != u_spoke_edges.end())
            w = witness_spoke_edge(ctx, cert, Side::U, static_cast<int>(u_it - u_spoke_edges.begin()));
        else if (v_it != v_spoke_edges.end())
            w = witness_spoke_edge(ctx, cert, Side::V, static_cast<int>(v_it - v_spoke_edges.begin()));
        else
            throw Error(ErrorCode::CertificationFailed, "edge " + std::to_string(e) + " has no witness category");
        rep.witnesses.push_back(std::move(w));
    }

    rep.all_strict =
        std::all_of(rep.witnesses.begin(), rep.witnesses.end(), [](const EdgeWitness& w) { return w.strict; });
    if (!rep.all_strict)
        throw Error(ErrorCode::CertificationFailed, "some edge witness is not strictly decreasing");
    return rep;
}

}  // namespace ccrit
