#include <doctest.h>

#include <algorithm>

#include "ccrit/certify.hpp"
#include "support/catalog.hpp"

using namespace ccrit;

namespace {

SynthesisCertificate dodecahedron_certificate() {
    static SynthesisCertificate cert = [] {
        SimpleGraph dod = catalog::dodecahedron_graph();
        int far = catalog::antipodal_vertex(dod, 0);
        return synthesize(catalog::add_edge(dod, 0, far), VertexPair(0, far));
    }();
    return cert;
}

Int manual_count(const CoreContext& ctx, const CombinatorialDrawing& d, const IntegerWeighting& omega) {
    Int total = 0;
    auto walk_sum = [&](const DualWalk& w) {
        Int s = 0;
        for (int e : w.steps) s += omega[ctx.g_edge_of_core[e]];
        return s;
    };
    total += omega[ctx.uv_edge()] * walk_sum(d.route_uv);
    for (int i = 0; i < 3; ++i) {
        total += omega[ctx.spoke_edge_u(i)] * walk_sum(d.u_spokes[i]);
        total += omega[ctx.spoke_edge_v(i)] * walk_sum(d.v_spokes[i]);
    }
    for (auto& [i, j] : d.spoke_cross) total += omega[ctx.spoke_edge_u(i)] * omega[ctx.spoke_edge_v(j)];
    return total;
}

}  // namespace

TEST_CASE("check_conditions passes on the synthesized instance") {
    SynthesisCertificate cert = dodecahedron_certificate();
    ConditionReport rep = check_conditions(cert);
    CHECK(rep.pass);
    CHECK(rep.balanced);
    CHECK(rep.pair_product_ok);
    CHECK(rep.pair_product_margin > 0);
    CHECK(rep.face_ineq_u_ok);
    CHECK(rep.tight_u_ok);
    CHECK(rep.face_ineq_v_ok);
    CHECK(rep.tight_v_ok);
    CHECK(rep.spoke_bound_ok);
    for (int i = 0; i < 3; ++i) {
        CHECK(rep.tight_residue_u[i] == 0);
        CHECK(rep.tight_residue_v[i] == 0);
    }
}

TEST_CASE("falsifier: doubled omega(uv) breaks the face inequalities") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    cert.omega[ctx.uv_edge()] *= 2;
    ConditionReport rep = check_conditions(cert);
    CHECK(!rep.pass);
    bool face_item_failed = !rep.face_ineq_u_ok || !rep.face_ineq_v_ok;
    CHECK(face_item_failed);
    CHECK(!rep.tight_u_ok);  // the tight faces lose their equalities
}

TEST_CASE("falsifier: one inflated core weight breaks balancedness") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    int core_edge = 0;
    cert.omega[ctx.g_edge_of_core[core_edge]] *= 1000;
    ConditionReport rep = check_conditions(cert);
    CHECK(!rep.pass);
    CHECK(!rep.balanced);
    CHECK(std::count(rep.unbalanced_core_edges.begin(), rep.unbalanced_core_edges.end(), core_edge) == 1);

    // The same break surfaces as BalancednessViolated in the witness path.
    try {
        witness_core_edge(ctx, cert, ctx.g_edge_of_core[core_edge]);
        FAIL("expected BalancednessViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BalancednessViolated);
    }
}

TEST_CASE("falsifier: spoke product boundary case fails condition (7)") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    // omega(uu_1) = omega(vv_1) = 1 and min core weight 9: 1 < 9/9 is false.
    cert.omega[ctx.spoke_edge_u(0)] = 1;
    cert.omega[ctx.spoke_edge_v(0)] = 1;
    for (int ce = 0; ce < ctx.core.edge_count(); ++ce) cert.omega[ctx.g_edge_of_core[ce]] = 9;
    ConditionReport rep = check_conditions(cert);
    CHECK(!rep.pass);
    CHECK(!rep.spoke_bound_ok);
    CHECK(rep.spoke_margin9[0][0] == 0);
}

TEST_CASE("upper bound drawing realizes t*d and replays") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    IntegerWeighting omega_star(ctx.core.edge_count());
    for (int ce = 0; ce < ctx.core.edge_count(); ++ce) omega_star[ce] = cert.omega[ctx.g_edge_of_core[ce]];
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);
    Int t = cert.omega[ctx.uv_edge()];
    Int d_uv = dt.d(ctx.anchors.f_u, ctx.anchors.f_v);
    CHECK(d_uv > 0);  // F_u != F_v and positive weights

    CombinatorialDrawing d = upper_bound_drawing(ctx, cert);
    CHECK(d.face_u == ctx.anchors.f_u);
    CHECK(d.face_v == ctx.anchors.f_v);
    for (int i = 0; i < 3; ++i) {
        CHECK(d.u_spokes[i].steps.empty());
        CHECK(d.v_spokes[i].steps.empty());
    }
    CHECK(d.spoke_cross.empty());

    Int count = count_crossings(ctx, d, cert.omega);
    CHECK(count == t * d_uv);
    CHECK(count == manual_count(ctx, d, cert.omega));
}

TEST_CASE("count_crossings validates drawings") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    CombinatorialDrawing d = upper_bound_drawing(ctx, cert);

    // Breaking the walk breaks the replay.
    CombinatorialDrawing bad = d;
    bad.route_uv.steps.push_back(bad.route_uv.steps.back());
    CHECK_THROWS_AS(count_crossings(ctx, bad, cert.omega), Error);

    CombinatorialDrawing bad2 = d;
    bad2.face_v = bad2.face_u;
    CHECK_THROWS_AS(count_crossings(ctx, bad2, cert.omega), Error);

    CombinatorialDrawing bad3 = d;
    bad3.spoke_cross = {{0, 0}, {0, 0}};
    CHECK_THROWS_AS(count_crossings(ctx, bad3, cert.omega), Error);
}

TEST_CASE("core and uv witnesses decrease by exactly t and d") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    IntegerWeighting omega_star(ctx.core.edge_count());
    for (int ce = 0; ce < ctx.core.edge_count(); ++ce) omega_star[ce] = cert.omega[ctx.g_edge_of_core[ce]];
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);
    Int t = cert.omega[ctx.uv_edge()];
    Int d_uv = dt.d(ctx.anchors.f_u, ctx.anchors.f_v);
    Int cr = t * d_uv;

    for (int ce = 0; ce < ctx.core.edge_count(); ++ce) {
        EdgeWitness w = witness_core_edge(ctx, cert, ctx.g_edge_of_core[ce]);
        CHECK(w.count_full == cr);
        CHECK(w.count_reduced == cr - t);
        CHECK(w.strict);
        // The route passes through the decremented edge's dual exactly once.
        CHECK(std::count(w.drawing.route_uv.steps.begin(), w.drawing.route_uv.steps.end(), ce) == 1);
    }

    EdgeWitness wuv = witness_core_edge(ctx, cert, ctx.uv_edge());
    CHECK(wuv.count_full == cr);
    CHECK(wuv.count_reduced == cr - d_uv);
    CHECK(wuv.strict);
}

TEST_CASE("spoke witnesses stay under cr + min core and decrease strictly") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    IntegerWeighting omega_star(ctx.core.edge_count());
    for (int ce = 0; ce < ctx.core.edge_count(); ++ce) omega_star[ce] = cert.omega[ctx.g_edge_of_core[ce]];
    DistanceTable dt = all_pairs_distances(ctx.dual, omega_star, ctx.anchors);
    Int t = cert.omega[ctx.uv_edge()];
    Int cr = t * dt.d(ctx.anchors.f_u, ctx.anchors.f_v);
    Int min_core = *std::min_element(omega_star.begin(), omega_star.end());

    // Conservative nine-pair crossing budget stays under the min core
    // weight, by condition (7) summed over the pairs.
    Int pair_total = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) pair_total += cert.omega[ctx.spoke_edge_u(i)] * cert.omega[ctx.spoke_edge_v(j)];
    CHECK(pair_total < min_core);

    for (Side side : {Side::U, Side::V}) {
        for (int i = 0; i < 3; ++i) {
            EdgeWitness w = witness_spoke_edge(ctx, cert, side, i);
            CHECK(w.count_full < cr + min_core);
            CHECK(w.count_reduced < cr);
            CHECK(w.strict);

            // Linearity: the decrement removes the spoke's walk weight plus
            // its share of the pair crossings.
            Int walkw = 0;
            const DualWalk& walk = side == Side::U ? w.drawing.u_spokes[i] : w.drawing.v_spokes[i];
            for (int e : walk.steps) walkw += cert.omega[ctx.g_edge_of_core[e]];
            Int other_sum = 0;
            for (int j = 0; j < 3; ++j)
                other_sum += side == Side::U ? cert.omega[ctx.spoke_edge_v(j)] : cert.omega[ctx.spoke_edge_u(j)];
            CHECK(w.count_full - w.count_reduced == walkw + other_sum);
        }
    }
}

TEST_CASE("lower bound pillars pass and echo (F_u, F_v)") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    LowerBoundReport rep = lower_bound_certificate(cert);
    CHECK(rep.pass);
    CHECK(rep.induced_planarity_ok);
    CHECK(rep.face_ineq_ok);
    CHECK(rep.triangle_ok);
    CHECK(rep.min_triangle_margin == 0);
    CHECK(rep.min_pair_f1 == ctx.anchors.f_u);
    CHECK(rep.min_pair_f2 == ctx.anchors.f_v);
}

TEST_CASE("lower bound pillar (i) fails when condition (2) is broken") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CoreContext ctx = context_of_certificate(cert);
    cert.omega[ctx.uv_edge()] = cert.omega[ctx.uv_edge()] * cert.c * cert.c;
    LowerBoundReport rep = lower_bound_certificate(cert);
    CHECK(!rep.pass);
    CHECK(!rep.induced_planarity_ok);
    CHECK(rep.pair_margin <= 0);
}

TEST_CASE("certify_critical covers every edge strictly") {
    SynthesisCertificate cert = dodecahedron_certificate();
    CriticalityReport rep = certify_critical(cert);
    CHECK(rep.all_strict);
    CHECK(rep.witnesses.size() == static_cast<size_t>(cert.g.edge_count()));
    CoreContext ctx = context_of_certificate(cert);
    for (const EdgeWitness& w : rep.witnesses) {
        CHECK(w.strict);
        CHECK(w.count_reduced < rep.cr_value);
        CHECK(w.count_full == manual_count(ctx, w.drawing, cert.omega));
    }
    CombinatorialDrawing ub = upper_bound_drawing(ctx, cert);
    CHECK(rep.cr_value == count_crossings(ctx, ub, cert.omega));

    // Determinism: identical certificates yield identical reports.
    CriticalityReport rep2 = certify_critical(cert);
    CHECK(rep2.cr_value == rep.cr_value);
    REQUIRE(rep2.witnesses.size() == rep.witnesses.size());
    for (size_t i = 0; i < rep.witnesses.size(); ++i) {
        CHECK(rep2.witnesses[i].count_full == rep.witnesses[i].count_full);
        CHECK(rep2.witnesses[i].count_reduced == rep.witnesses[i].count_reduced);
        CHECK(rep2.witnesses[i].drawing.route_uv.steps == rep.witnesses[i].drawing.route_uv.steps);
    }
}
