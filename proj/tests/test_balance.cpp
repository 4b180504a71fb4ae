#include <doctest.h>

#include <map>
#include <set>

#include "ccrit/balance.hpp"
#include "ccrit/embed.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace ccrit;

namespace {

MultiEdgeGraph k4_on_stab() {
    // Vertices: 0 = s, 1 = t, 2 = a, 3 = b.
    return catalog::as_multi(catalog::complete_graph(4));
}

void check_certificate(const MultiEdgeGraph& g, int s, int t, const BalancedCertificate& cert) {
    BalanceReport rep = verify_balanced(g, cert.weights, s, t);
    CHECK(rep.balanced);
    CHECK(rep.terminal_distance == cert.terminal_distance);
    // Every edge appears in its own witness, and the witness telescopes to D.
    REQUIRE(cert.witnesses.size() == static_cast<size_t>(g.edge_count()));
    std::map<std::pair<int, int>, std::vector<int>> edges_between;
    for (int e = 0; e < g.edge_count(); ++e)
        edges_between[{g.edges[e].a, g.edges[e].b}].push_back(e);
    for (int e = 0; e < g.edge_count(); ++e) {
        const PathWitness& w = cert.witnesses[e];
        CHECK(w.edge == e);
        CHECK(w.vertices.front() == s);
        CHECK(w.vertices.back() == t);
        // The witness contains the edge's endpoints consecutively.
        bool found = false;
        for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
            VertexPair step(w.vertices[i], w.vertices[i + 1]);
            if (step == g.edges[e]) found = true;
        }
        CHECK(found);
        // Path property: no repeated vertices.
        std::set<int> distinct(w.vertices.begin(), w.vertices.end());
        CHECK(distinct.size() == w.vertices.size());
        // Total weight is exactly D, summing minimal weights per step.
        Int total = 0;
        for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
            auto key = std::make_pair(std::min(w.vertices[i], w.vertices[i + 1]),
                                      std::max(w.vertices[i], w.vertices[i + 1]));
            auto it = edges_between.find(key);
            REQUIRE(it != edges_between.end());
            Int best = cert.weights[it->second.front()];
            for (int cand : it->second) best = std::min(best, cert.weights[cand]);
            total += best;
        }
        CHECK(total == cert.terminal_distance);
    }
}

}  // namespace

TEST_CASE("harmonic positions: path, 4-cycle, K4") {
    // Path s-a-t: a sits at 1/2.
    MultiEdgeGraph path = catalog::as_multi(catalog::path_graph(3));
    HarmonicPositions hp = harmonic_positions(path, 0, 2);
    CHECK(hp.position[1] == Rat(1, 2));

    // 4-cycle s-a-t-b-s: a and b coincide at 1/2 (and are not adjacent).
    MultiEdgeGraph c4 = catalog::as_multi(catalog::cycle_graph(4));
    HarmonicPositions hc = harmonic_positions(c4, 0, 2);
    CHECK(hc.position[1] == Rat(1, 2));
    CHECK(hc.position[3] == Rat(1, 2));

    // K4 on {s,t,a,b}: the linear system 3x_a = 1 + x_b, 3x_b = 1 + x_a.
    HarmonicPositions hk = harmonic_positions(k4_on_stab(), 0, 1);
    CHECK(hk.position[2] == Rat(1, 2));
    CHECK(hk.position[3] == Rat(1, 2));

    // The discrete maximum principle: strictly interior vertices with
    // non-constant neighborhoods see both sides.
    MultiEdgeGraph pet = catalog::as_multi(catalog::petersen_graph());
    HarmonicPositions hpet = harmonic_positions(pet, 0, 7);
    auto adj = pet.adjacency();
    for (int v = 0; v < pet.n; ++v) {
        if (v == 0 || v == 7) continue;
        bool below = false, above = false, all_equal = true;
        for (auto& [w, e] : adj[v]) {
            if (hpet.position[w] < hpet.position[v]) below = true;
            if (hpet.position[w] > hpet.position[v]) above = true;
            if (hpet.position[w] != hpet.position[v]) all_equal = false;
        }
        CHECK((all_equal || (below && above)));
    }
}

TEST_CASE("exact rational solve oracle") {
    // 3x + y = 5, x - y = -1  =>  x = 1, y = 2.
    std::vector<std::vector<Rat>> a{{Rat(3), Rat(1)}, {Rat(1), Rat(-1)}};
    std::vector<Rat> b{Rat(5), Rat(-1)};
    auto x = solve_rational(a, b);
    CHECK(x[0] == Rat(1));
    CHECK(x[1] == Rat(2));

    std::vector<std::vector<Rat>> sing{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
    CHECK_THROWS_AS(solve_rational(sing, b), Error);
}

TEST_CASE("balanced weights: path and 4-cycle") {
    MultiEdgeGraph path = catalog::as_multi(catalog::path_graph(3));
    BalancedCertificate cp = balanced_weights(path, 0, 2);
    CHECK(cp.weights == IntegerWeighting{1, 1});
    CHECK(cp.terminal_distance == 2);
    CHECK(cp.perturbation_rounds == 0);
    check_certificate(path, 0, 2, cp);

    MultiEdgeGraph c4 = catalog::as_multi(catalog::cycle_graph(4));
    BalancedCertificate cc = balanced_weights(c4, 0, 2);
    CHECK(cc.terminal_distance == 2);
    CHECK(cc.weights == IntegerWeighting{1, 1, 1, 1});
    CHECK(cc.perturbation_rounds == 0);
    check_certificate(c4, 0, 2, cc);
}

TEST_CASE("balanced weights: K4 needs a perturbation and passes") {
    MultiEdgeGraph k4 = k4_on_stab();
    BalancedCertificate cert = balanced_weights(k4, 0, 1);
    CHECK(cert.perturbation_rounds > 0);  // a and b coincide at 1/2 and are adjacent
    check_certificate(k4, 0, 1, cert);
}

TEST_CASE("K4 reference weighting verifies balanced with D = 3") {
    // (sa:1, at:2, sb:2, bt:1, ab:1, st:3) on s=0, t=1, a=2, b=3.
    SimpleGraph k4 = catalog::complete_graph(4);
    MultiEdgeGraph m = catalog::as_multi(k4);
    IntegerWeighting w(6);
    w[k4.edge_id(0, 2)] = 1;  // sa
    w[k4.edge_id(2, 1)] = 2;  // at
    w[k4.edge_id(0, 3)] = 2;  // sb
    w[k4.edge_id(3, 1)] = 1;  // bt
    w[k4.edge_id(2, 3)] = 1;  // ab
    w[k4.edge_id(0, 1)] = 3;  // st
    BalanceReport rep = verify_balanced(m, w, 0, 1);
    CHECK(rep.balanced);
    CHECK(rep.terminal_distance == 3);

    // Exhaustive enumeration agrees edge by edge.
    auto oracle = oracles::enumerate_st_paths(m, w, 0, 1);
    CHECK(oracle.shortest == 3);
    for (int e = 0; e < m.edge_count(); ++e) CHECK(oracle.edge_on_shortest[e]);
}

TEST_CASE("all-ones K4 fails with the five non-st edges") {
    SimpleGraph k4 = catalog::complete_graph(4);
    MultiEdgeGraph m = catalog::as_multi(k4);
    IntegerWeighting ones(6, 1);
    BalanceReport rep = verify_balanced(m, ones, 0, 1);
    CHECK(!rep.balanced);
    CHECK(rep.terminal_distance == 1);
    std::set<int> failing(rep.failing_edges.begin(), rep.failing_edges.end());
    std::set<int> expected{k4.edge_id(0, 2), k4.edge_id(2, 1), k4.edge_id(0, 3), k4.edge_id(3, 1),
                           k4.edge_id(2, 3)};
    CHECK(failing == expected);
}

TEST_CASE("verify_balanced matches exhaustive enumeration on a corpus") {
    struct Instance {
        MultiEdgeGraph g;
        int s, t;
    };
    std::vector<Instance> corpus;
    corpus.push_back({catalog::as_multi(catalog::path_graph(3)), 0, 2});
    corpus.push_back({catalog::as_multi(catalog::cycle_graph(4)), 0, 2});
    corpus.push_back({k4_on_stab(), 0, 1});
    corpus.push_back({catalog::parallel_bundle(4), 0, 1});
    corpus.push_back({catalog::doubled_cycle(5), 0, 2});
    corpus.push_back({catalog::as_multi(catalog::octahedron_graph()), 0, 3});
    for (unsigned long long seed = 10; seed < 16; ++seed) {
        MultiEdgeGraph g = catalog::random_two_connected_multigraph(seed, 9);
        catalog::Rng rng(seed * 77 + 1);
        int s = rng.below(g.n), t = (s + 1 + rng.below(g.n - 1)) % g.n;
        corpus.push_back({g, s, t});
    }

    for (const auto& inst : corpus) {
        // Arbitrary deterministic positive weights.
        IntegerWeighting w(inst.g.edge_count());
        for (int e = 0; e < inst.g.edge_count(); ++e) w[e] = 1 + (7 * e) % 5;
        BalanceReport rep = verify_balanced(inst.g, w, inst.s, inst.t);
        auto oracle = oracles::enumerate_st_paths(inst.g, w, inst.s, inst.t);
        REQUIRE(oracle.connected);
        CHECK(rep.terminal_distance == oracle.shortest);
        for (int e = 0; e < inst.g.edge_count(); ++e) {
            bool fails = std::count(rep.failing_edges.begin(), rep.failing_edges.end(), e) > 0;
            CHECK(fails == !oracle.edge_on_shortest[e]);
        }

        // The constructed weighting passes both verifier and oracle.
        BalancedCertificate cert = balanced_weights(inst.g, inst.s, inst.t);
        check_certificate(inst.g, inst.s, inst.t, cert);
        auto oracle2 = oracles::enumerate_st_paths(inst.g, cert.weights, inst.s, inst.t);
        CHECK(oracle2.shortest == cert.terminal_distance);
        for (int e = 0; e < inst.g.edge_count(); ++e) CHECK(oracle2.edge_on_shortest[e]);
    }
}

TEST_CASE("parallel edges are balanced or failing together") {
    MultiEdgeGraph g = catalog::doubled_cycle(6);
    BalancedCertificate cert = balanced_weights(g, 0, 3);
    check_certificate(g, 0, 3, cert);
    for (int e = 0; e < g.edge_count(); ++e)
        for (int f = e + 1; f < g.edge_count(); ++f)
            if (g.edges[e] == g.edges[f]) CHECK(cert.weights[e] == cert.weights[f]);
}

TEST_CASE("degenerate inputs fail loudly") {
    // A pendant edge cannot lie on any s-t path; the gate rejects it.
    MultiEdgeGraph pendant;
    pendant.n = 4;
    pendant.edges = {VertexPair(0, 1), VertexPair(1, 2), VertexPair(1, 3)};
    CHECK_THROWS_AS(balanced_weights(pendant, 0, 2), Error);
    CHECK_THROWS_AS(harmonic_positions(pendant, 1, 1), Error);
}
