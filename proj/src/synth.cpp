#include "ccrit/synth.hpp"

#include <algorithm>
#include <string>

#include "ccrit/certify.hpp"

namespace ccrit {

int CoreContext::spoke_edge_u(int i) const { return g.edge_id(uv.a, u_neighbors_g[i]); }
int CoreContext::spoke_edge_v(int i) const { return g.edge_id(uv.b, v_neighbors_g[i]); }
int CoreContext::uv_edge() const { return g.edge_id(uv.a, uv.b); }

CoreContext make_core_context(const SimpleGraph& g, const VertexPair& uv, const std::array<int, 3>& u_nbrs,
                              const std::array<int, 3>& v_nbrs,
                              const std::optional<std::vector<std::vector<int>>>& core_rotation) {
    CoreContext ctx;
    ctx.g = g;
    ctx.uv = uv;
    ctx.u_neighbors_g = u_nbrs;
    ctx.v_neighbors_g = v_nbrs;

    ctx.core_of_g.assign(g.vertex_count(), -1);
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (x == uv.a || x == uv.b) continue;
        ctx.core_of_g[x] = static_cast<int>(ctx.g_of_core.size());
        ctx.g_of_core.push_back(x);
    }
    std::vector<VertexPair> core_edges;
    ctx.core_edge_of_g.assign(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const VertexPair& p = g.edge(e);
        if (ctx.core_of_g[p.a] < 0 || ctx.core_of_g[p.b] < 0) continue;
        core_edges.emplace_back(ctx.core_of_g[p.a], ctx.core_of_g[p.b]);
    }
    ctx.core = SimpleGraph(static_cast<int>(ctx.g_of_core.size()), std::move(core_edges));
    ctx.g_edge_of_core.assign(ctx.core.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const VertexPair& p = g.edge(e);
        if (ctx.core_of_g[p.a] < 0 || ctx.core_of_g[p.b] < 0) continue;
        int ce = ctx.core.edge_id(ctx.core_of_g[p.a], ctx.core_of_g[p.b]);
        ctx.core_edge_of_g[e] = ce;
        ctx.g_edge_of_core[ce] = e;
    }

    if (core_rotation) {
        const auto& orders = *core_rotation;
        if (static_cast<int>(orders.size()) != ctx.core.vertex_count())
            throw Error(ErrorCode::CorruptRotation, "stored rotation has wrong vertex count");
        std::vector<std::vector<int>> rot(ctx.core.vertex_count());
        for (int v = 0; v < ctx.core.vertex_count(); ++v) {
            for (int w : orders[v]) {
                int e = ctx.core.edge_id(v, w);
                if (e < 0) throw Error(ErrorCode::CorruptRotation, "stored rotation lists a non-edge");
                rot[v].push_back(2 * e + (ctx.core.edge(e).a == v ? 0 : 1));
            }
        }
        ctx.rotation = RotationSystem(ctx.core.vertex_count(), ctx.core.edges(), std::move(rot));
    } else {
        ctx.rotation = planar_embedding(ctx.core);
    }
    ctx.face_set = faces(ctx.rotation);
    ctx.dual = dual_graph(ctx.face_set);

    std::array<int, 3> u_core{}, v_core{};
    for (int i = 0; i < 3; ++i) {
        u_core[i] = ctx.core_of_g[u_nbrs[i]];
        v_core[i] = ctx.core_of_g[v_nbrs[i]];
        if (u_core[i] < 0 || v_core[i] < 0)
            throw Error(ErrorCode::DegenerateAnchors, "terminal neighbor missing from the core");
    }
    ctx.anchors = anchor_faces(ctx.face_set, u_core, v_core);
    return ctx;
}

const InequalityRow& InequalitySystem::row_of_face(int face) const {
    for (const InequalityRow& r : rows)
        if (r.face == face) return r;
    throw Error(ErrorCode::ClaimProofMismatch, "no row for face " + std::to_string(face));
}

InequalitySystem build_inequality_system(const DistanceTable& dt, Side side) {
    InequalitySystem sys;
    sys.side = side;
    sys.base_face = side == Side::U ? dt.anchors.f_u : dt.anchors.f_v;
    sys.w_faces = side == Side::U ? dt.anchors.f_u_i : dt.anchors.f_v_i;
    auto term = [&](int i, int f) -> const Int& { return side == Side::U ? dt.du(i, f) : dt.dv(i, f); };

    for (int f = 0; f < dt.face_count(); ++f) {
        if (f == sys.base_face) continue;
        InequalityRow row;
        row.face = f;
        for (int i = 0; i < 3; ++i) row.coeff[i] = term(i, f);
        row.rhs = dt.d(sys.base_face, f);
        sys.rows.push_back(std::move(row));
    }

    // Positive integrality: the Gamma row for F_{w_i} has a zero exactly in
    // column i, positive entries elsewhere, positive right-hand side; no
    // other row has a zero anywhere.
    sys.gamma_row = {-1, -1, -1};
    for (int idx = 0; idx < static_cast<int>(sys.rows.size()); ++idx) {
        const InequalityRow& row = sys.rows[idx];
        for (int i = 0; i < 3; ++i) {
            bool is_gamma_i = row.face == sys.w_faces[i];
            if (is_gamma_i) sys.gamma_row[i] = idx;
            if ((row.coeff[i] == 0) != is_gamma_i)
                throw Error(ErrorCode::DegenerateAnchors,
                            "row for face " + std::to_string(row.face) + " violates positive integrality in column " +
                                std::to_string(i + 1));
        }
        if (row.rhs <= 0)
            throw Error(ErrorCode::DegenerateAnchors, "row for face " + std::to_string(row.face) +
                                                          " has nonpositive right-hand side");
    }
    for (int i = 0; i < 3; ++i)
        if (sys.gamma_row[i] < 0)
            throw Error(ErrorCode::DegenerateAnchors, "missing Gamma row " + std::to_string(i + 1));
    return sys;
}

ClaimPoint claim_point(const InequalitySystem& sys) {
    const InequalityRow& g1 = sys.rows[sys.gamma_row[0]];
    const InequalityRow& g2 = sys.rows[sys.gamma_row[1]];

    // Gamma1: c12*x2 + c13*x3 = h1, Gamma2: c21*x1 + c23*x3 = h2. Along the
    // intersection line, parametrized by x3 = tau, positivity holds for
    // tau in (0, min(h1/c13, h2/c23)); take the midpoint.
    Rat tau_max = std::min(Rat(g1.rhs) / Rat(g1.coeff[2]), Rat(g2.rhs) / Rat(g2.coeff[2]));
    Rat tau = tau_max / 2;
    Rat a3 = tau;
    Rat a2 = (Rat(g1.rhs) - Rat(g1.coeff[2]) * tau) / Rat(g1.coeff[1]);
    Rat a1 = (Rat(g2.rhs) - Rat(g2.coeff[2]) * tau) / Rat(g2.coeff[0]);
    if (a1 <= 0 || a2 <= 0 || a3 <= 0)
        throw Error(ErrorCode::ClaimProofMismatch, "interior point of the Gamma line is not positive");

    // Ray sweep {(x1, a2, a3) : x1 >= 0}: every row but Gamma1 has a positive
    // x1 coefficient and meets the ray once; take the largest hit.
    Rat best_x1;
    int best_row = -1;
    // Rows are in increasing face-id order, so replacing only on strict
    // improvement implements the smallest-face tie-break.
    for (int idx = 0; idx < static_cast<int>(sys.rows.size()); ++idx) {
        if (idx == sys.gamma_row[0]) continue;
        const InequalityRow& row = sys.rows[idx];
        Rat hit = (Rat(row.rhs) - Rat(row.coeff[1]) * a2 - Rat(row.coeff[2]) * a3) / Rat(row.coeff[0]);
        if (best_row < 0 || hit > best_x1) {
            best_x1 = hit;
            best_row = idx;
        }
    }
    if (best_row < 0) throw Error(ErrorCode::ClaimProofMismatch, "ray sweep found no candidate row");
    {
        // Gamma2 itself is hit at x1 = a1 > 0, so the sweep value is positive.
        Rat g2_hit = (Rat(g2.rhs) - Rat(g2.coeff[1]) * a2 - Rat(g2.coeff[2]) * a3) / Rat(g2.coeff[0]);
        if (g2_hit != a1) throw Error(ErrorCode::ClaimProofMismatch, "Gamma2 hit differs from line point");
    }

    ClaimPoint p;
    p.x = {best_x1, a2, a3};
    p.tight_faces = {sys.rows[best_row].face, sys.w_faces[0], sys.w_faces[0]};
    if (p.x[0] <= 0) throw Error(ErrorCode::ClaimProofMismatch, "sweep produced a nonpositive x1");

    // Exact recheck: feasibility of every row, equality on the tight rows,
    // and d(w_i, U_i) > 0.
    for (const InequalityRow& row : sys.rows) {
        Rat lhs = Rat(row.coeff[0]) * p.x[0] + Rat(row.coeff[1]) * p.x[1] + Rat(row.coeff[2]) * p.x[2];
        if (lhs < Rat(row.rhs))
            throw Error(ErrorCode::ClaimProofMismatch, "row for face " + std::to_string(row.face) + " is violated");
    }
    for (int i = 0; i < 3; ++i) {
        const InequalityRow& row = sys.row_of_face(p.tight_faces[i]);
        Rat lhs = Rat(row.coeff[0]) * p.x[0] + Rat(row.coeff[1]) * p.x[1] + Rat(row.coeff[2]) * p.x[2];
        if (lhs != Rat(row.rhs))
            throw Error(ErrorCode::ClaimProofMismatch,
                        "tight row " + std::to_string(i + 1) + " is not an equality");
        if (row.coeff[i] <= 0)
            throw Error(ErrorCode::ClaimProofMismatch, "d(w_" + std::to_string(i + 1) + ", U_" +
                                                           std::to_string(i + 1) + ") is not positive");
    }
    return p;
}

Integerized integerize(const ClaimPoint& p_u, const ClaimPoint& p_v) {
    std::array<Int, 3> p, q, a, b;
    for (int i = 0; i < 3; ++i) {
        p[i] = p_u.x[i].get_num();
        q[i] = p_u.x[i].get_den();
        a[i] = p_v.x[i].get_num();
        b[i] = p_v.x[i].get_den();
    }
    Integerized out;
    Int qs = q[0] * q[1] * q[2];
    Int bs = b[0] * b[1] * b[2];
    out.m = qs * bs;
    out.r = {p[0] * q[1] * q[2] * bs, p[1] * q[0] * q[2] * bs, p[2] * q[0] * q[1] * bs};
    out.s = {a[0] * b[1] * b[2] * qs, a[1] * b[0] * b[2] * qs, a[2] * b[0] * b[1] * qs};
    for (int i = 0; i < 3; ++i) {
        // r_i = x_i * M exactly; anything else means the fractions were not
        // reduced.
        if (Rat(out.r[i]) != p_u.x[i] * Rat(out.m) || Rat(out.s[i]) != p_v.x[i] * Rat(out.m))
            throw Error(ErrorCode::ClaimProofMismatch, "integerization does not scale the claim points");
    }
    return out;
}

Int choose_c(const Int& m, const Int& d_fu_fv, const Int& min_mu, const std::array<Int, 3>& r,
             const std::array<Int, 3>& s) {
    Int bound1 = floor_div(m * d_fu_fv, min_mu * min_mu);
    Int max_rs = 0;
    for (const Int& ri : r)
        for (const Int& sj : s) {
            Int prod = ri * sj;
            if (prod > max_rs) max_rs = prod;
        }
    Int bound2 = floor_div(9 * max_rs, min_mu);
    Int c = std::max(bound1, bound2) + 1;
    // c must strictly exceed both raw bounds.
    if (c * min_mu * min_mu <= m * d_fu_fv || c * min_mu <= 9 * max_rs)
        throw Error(ErrorCode::ClaimProofMismatch, "chosen c does not satisfy the strict bounds");
    return c;
}

SynthesisCertificate synthesize(const SimpleGraph& g, const VertexPair& uv, int max_perturb_rounds) {
    HypothesisReport hyp = validate_hypotheses(g, uv);
    if (!hyp.accepted()) {
        std::string msg = "hypotheses rejected:";
        for (const Violation& f : hyp.failures) msg += " [" + f.kind + "] " + f.detail;
        throw Error(ErrorCode::DegenerateAnchors, msg);
    }

    CoreContext ctx = make_core_context(g, uv, hyp.u_neighbors, hyp.v_neighbors);

    // Lemma 2 on the dual with terminals F_u, F_v gives the balanced mu*.
    BalancedCertificate balanced =
        balanced_weights(ctx.dual.graph, ctx.anchors.f_u, ctx.anchors.f_v, max_perturb_rounds);
    IntegerWeighting mu_star = balanced.weights;
    IntegerWeighting mu = transfer_weights_to_primal(mu_star, ctx.core.edge_count());

    DistanceTable dt = all_pairs_distances(ctx.dual, mu_star, ctx.anchors);

    InequalitySystem sys_u = build_inequality_system(dt, Side::U);
    InequalitySystem sys_v = build_inequality_system(dt, Side::V);
    ClaimPoint p_u = claim_point(sys_u);
    ClaimPoint p_v = claim_point(sys_v);

    Integerized num = integerize(p_u, p_v);

    Int min_mu = *std::min_element(mu.begin(), mu.end());
    Int c = choose_c(num.m, dt.d(ctx.anchors.f_u, ctx.anchors.f_v), min_mu, num.r, num.s);

    SynthesisCertificate cert;
    cert.g = g;
    cert.uv = uv;
    cert.u_neighbors = hyp.u_neighbors;
    cert.v_neighbors = hyp.v_neighbors;
    cert.core_rotation = ctx.rotation.neighbor_orders();
    cert.mu = mu;
    cert.dist_mu = dt.face_dist;
    cert.claim_u = p_u;
    cert.claim_v = p_v;
    cert.m = num.m;
    cert.r = num.r;
    cert.s = num.s;
    cert.c = c;

    cert.omega.assign(g.edge_count(), Int(0));
    cert.omega[ctx.uv_edge()] = num.m;
    for (int i = 0; i < 3; ++i) {
        cert.omega[ctx.spoke_edge_u(i)] = num.r[i];
        cert.omega[ctx.spoke_edge_v(i)] = num.s[i];
    }
    for (int ce = 0; ce < ctx.core.edge_count(); ++ce) cert.omega[ctx.g_edge_of_core[ce]] = c * mu[ce];
    require_positive_weights(cert.omega, g.edge_count());

    ConditionReport conditions = check_conditions(cert);
    if (!conditions.pass)
        throw Error(ErrorCode::FinalCheckFailed, "synthesized certificate fails " + conditions.failing_summary());
    return cert;
}

}  // namespace ccrit
