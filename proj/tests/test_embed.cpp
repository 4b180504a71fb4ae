#include <doctest.h>

#include <algorithm>
#include <set>

#include "ccrit/embed.hpp"
#include "ccrit/graph.hpp"
#include "support/catalog.hpp"
#include "support/oracles.hpp"

using namespace ccrit;

namespace {

FaceSet embed_faces(const SimpleGraph& g) { return faces(planar_embedding(g)); }

std::vector<int> face_sizes(const FaceSet& fs) {
    std::vector<int> out;
    for (const auto& c : fs.cycles) out.push_back(static_cast<int>(c.size()));
    std::sort(out.begin(), out.end());
    return out;
}

SimpleGraph remove_antipodal_pair(const SimpleGraph& g, int v, std::array<int, 3>* u_nbrs_out,
                                  std::array<int, 3>* v_nbrs_out) {
    int far = catalog::antipodal_vertex(g, v);
    std::vector<int> map(g.vertex_count(), -1);
    int next = 0;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (x != v && x != far) map[x] = next++;
    std::vector<std::pair<int, int>> edges;
    for (const VertexPair& e : g.edges())
        if (map[e.a] >= 0 && map[e.b] >= 0) edges.push_back({map[e.a], map[e.b]});
    int iu = 0, iv = 0;
    for (int w : g.neighbors(v)) (*u_nbrs_out)[iu++] = map[w];
    for (int w : g.neighbors(far)) (*v_nbrs_out)[iv++] = map[w];
    return build_simple_graph(next, edges);
}

}  // namespace

TEST_CASE("planar embeddings satisfy Euler's formula") {
    CHECK(embed_faces(catalog::complete_graph(4)).face_count() == 4);
    CHECK(embed_faces(catalog::cycle_graph(3)).face_count() == 2);

    FaceSet cube = embed_faces(catalog::cube_graph());
    CHECK(cube.face_count() == 6);
    CHECK(face_sizes(cube) == std::vector<int>{4, 4, 4, 4, 4, 4});

    FaceSet dod = embed_faces(catalog::dodecahedron_graph());
    CHECK(dod.face_count() == 12);
    CHECK(face_sizes(dod) == std::vector<int>(12, 5));
}

TEST_CASE("nonplanar graphs are rejected with a witness") {
    CHECK_THROWS_AS(planar_embedding(catalog::complete_graph(5)), Error);
    CHECK_THROWS_AS(planar_embedding(catalog::complete_bipartite(3, 3)), Error);
    CHECK_THROWS_AS(planar_embedding(catalog::petersen_graph()), Error);

    PlanarityCheck pc = check_planarity(catalog::complete_graph(5));
    CHECK(!pc.planar);
    // K5's Kuratowski witness is K5 itself.
    CHECK(pc.kuratowski_edges.size() == 10);
    CHECK(check_planarity(catalog::cube_graph()).planar);
}

TEST_CASE("embedding is deterministic") {
    SimpleGraph dod = catalog::dodecahedron_graph();
    RotationSystem a = planar_embedding(dod);
    RotationSystem b = planar_embedding(dod);
    CHECK(a.rotations() == b.rotations());
}

TEST_CASE("duality: cube -> octahedron, dodecahedron -> icosahedron") {
    FaceSet cube = embed_faces(catalog::cube_graph());
    DualGraph dual = dual_graph(cube);
    CHECK(dual.graph.n == 6);
    CHECK(dual.graph.edge_count() == 12);
    // Octahedron: 4-regular, no parallel edges.
    auto adj = dual.graph.adjacency();
    for (int f = 0; f < 6; ++f) CHECK(adj[f].size() == 4);
    std::set<VertexPair> distinct(dual.graph.edges.begin(), dual.graph.edges.end());
    CHECK(distinct.size() == 12);

    FaceSet dod = embed_faces(catalog::dodecahedron_graph());
    DualGraph ico = dual_graph(dod);
    CHECK(ico.graph.n == 12);
    CHECK(ico.graph.edge_count() == 30);
    auto iadj = ico.graph.adjacency();
    for (int f = 0; f < 12; ++f) CHECK(iadj[f].size() == 5);

    // Dual of the dual has as many faces as the primal has vertices.
    FaceSet dual_faces = faces(dual.rotation_system());
    CHECK(dual_faces.face_count() == 8);
    CHECK(faces(ico.rotation_system()).face_count() == 20);
}

TEST_CASE("cycle duals keep parallel edges") {
    FaceSet c4 = embed_faces(catalog::cycle_graph(4));
    DualGraph dual = dual_graph(c4);
    CHECK(dual.graph.n == 2);
    CHECK(dual.graph.edge_count() == 4);
    for (const VertexPair& e : dual.graph.edges) CHECK(e == VertexPair(0, 1));
}

TEST_CASE("bridges are rejected in dual construction") {
    // Two triangles joined by a bridge.
    SimpleGraph g = build_simple_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_THROWS_AS(dual_graph(embed_faces(g)), Error);
}

TEST_CASE("anchor faces on the dodecahedron core") {
    std::array<int, 3> u_nbrs{}, v_nbrs{};
    SimpleGraph core = remove_antipodal_pair(catalog::dodecahedron_graph(), 0, &u_nbrs, &v_nbrs);
    CHECK(core.vertex_count() == 18);
    CHECK(core.edge_count() == 24);
    FaceSet fs = embed_faces(core);
    CHECK(fs.face_count() == 8);

    AnchorFaces a = anchor_faces(fs, u_nbrs, v_nbrs);
    CHECK(a.f_u != a.f_v);
    std::set<int> distinct_u(a.f_u_i.begin(), a.f_u_i.end());
    std::set<int> distinct_v(a.f_v_i.begin(), a.f_v_i.end());
    CHECK(distinct_u.size() == 3);
    CHECK(distinct_v.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(a.f_u_i[i] != a.f_u);
        CHECK(a.f_v_i[i] != a.f_v);
    }
}

TEST_CASE("anchor faces on the cube core report GNotNonplanar") {
    std::array<int, 3> u_nbrs{}, v_nbrs{};
    SimpleGraph core = remove_antipodal_pair(catalog::cube_graph(), 0, &u_nbrs, &v_nbrs);
    CHECK(core.vertex_count() == 6);  // C6
    FaceSet fs = embed_faces(core);
    CHECK(fs.face_count() == 2);
    try {
        anchor_faces(fs, u_nbrs, v_nbrs);
        FAIL("expected GNotNonplanar");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GNotNonplanar);
    }
}

TEST_CASE("ambiguous anchors are reported") {
    // Theta core: two degree-3 hubs joined by three 2-edge paths. The path
    // midpoints pairwise share faces but no single face carries all three.
    SimpleGraph theta = build_simple_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    FaceSet fs = embed_faces(theta);
    CHECK(fs.face_count() == 3);
    std::array<int, 3> mid{2, 3, 4};
    try {
        anchor_faces(fs, mid, mid);
        FAIL("expected AnchorAmbiguous or GNotNonplanar");
    } catch (const Error& e) {
        bool expected = e.code() == ErrorCode::AnchorAmbiguous || e.code() == ErrorCode::GNotNonplanar;
        CHECK(expected);
    }

    // Degenerate input where a triple shares two faces: a 4-cycle with both
    // triples equal; every vertex lies on both faces.
    FaceSet c4 = embed_faces(catalog::cycle_graph(4));
    std::array<int, 3> triple{0, 1, 2};
    std::array<int, 3> triple2{1, 2, 3};
    try {
        anchor_faces(c4, triple, triple2);
        FAIL("expected GNotNonplanar (shared face)");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::GNotNonplanar);
    }

    // u-triple on one path of a long theta shares exactly two faces while the
    // v-triple pins a third face: ambiguous, not planar-looking.
    SimpleGraph theta2 =
        build_simple_graph(9, {{0, 2}, {2, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}, {0, 7}, {7, 8}, {8, 1}});
    FaceSet fs2 = embed_faces(theta2);
    std::array<int, 3> u_triple{2, 3, 4};
    std::array<int, 3> v_triple{5, 6, 7};
    try {
        anchor_faces(fs2, u_triple, v_triple);
        FAIL("expected AnchorAmbiguous (two shared faces)");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AnchorAmbiguous);
    }
}

TEST_CASE("weight transfer is an involution") {
    FaceSet cube = embed_faces(catalog::cube_graph());
    DualGraph dual = dual_graph(cube);
    IntegerWeighting w(12, 1);
    w[3] = 7;
    IntegerWeighting w_star = transfer_weights(w, dual);
    CHECK(w_star[3] == 7);
    IntegerWeighting back = transfer_weights_to_primal(w_star, 12);
    CHECK(back == w);
}

TEST_CASE("distances match the Floyd-Warshall oracle") {
    FaceSet cube = embed_faces(catalog::cube_graph());
    DualGraph dual = dual_graph(cube);

    // The octahedron with unit weights: adjacent at 1, opposite at 2.
    IntegerWeighting ones(dual.graph.edge_count(), 1);
    auto oracle = oracles::floyd_warshall(dual.graph, ones);
    for (int f = 0; f < dual.graph.n; ++f) {
        ShortestPaths sp = dijkstra(dual.graph, ones, f);
        std::set<Int> values;
        for (int g2 = 0; g2 < dual.graph.n; ++g2) {
            CHECK(sp.dist[g2] == oracle[f][g2]);
            values.insert(sp.dist[g2]);
        }
        CHECK(values == std::set<Int>{0, 1, 2});
    }

    // Raise one weight; routes re-route around it.
    IntegerWeighting bumped = ones;
    bumped[0] = 10;
    auto oracle2 = oracles::floyd_warshall(dual.graph, bumped);
    for (int f = 0; f < dual.graph.n; ++f) {
        ShortestPaths sp = dijkstra(dual.graph, bumped, f);
        for (int g2 = 0; g2 < dual.graph.n; ++g2) CHECK(sp.dist[g2] == oracle2[f][g2]);
    }
}

TEST_CASE("distance tables hold the metric and terminal-min invariants") {
    std::array<int, 3> u_nbrs{}, v_nbrs{};
    SimpleGraph core = remove_antipodal_pair(catalog::dodecahedron_graph(), 0, &u_nbrs, &v_nbrs);
    FaceSet fs = embed_faces(core);
    DualGraph dual = dual_graph(fs);
    AnchorFaces anchors = anchor_faces(fs, u_nbrs, v_nbrs);

    IntegerWeighting w(dual.graph.edge_count());
    for (int e = 0; e < dual.graph.edge_count(); ++e) w[e] = 1 + (e % 3);
    DistanceTable dt = all_pairs_distances(dual, w, anchors);

    const int nf = dt.face_count();
    for (int a = 0; a < nf; ++a) {
        CHECK(dt.d(a, a) == 0);
        for (int b = 0; b < nf; ++b) {
            CHECK(dt.d(a, b) == dt.d(b, a));
            for (int c = 0; c < nf; ++c) CHECK(dt.d(a, b) + dt.d(b, c) >= dt.d(a, c));
        }
    }
    for (int i = 0; i < 3; ++i)
        for (int f = 0; f < nf; ++f) {
            CHECK(dt.du(i, f) <= dt.d(anchors.f_u, f));
            CHECK(dt.du(i, f) <= dt.d(anchors.f_u_i[i], f));
            bool hits = dt.du(i, f) == dt.d(anchors.f_u, f) || dt.du(i, f) == dt.d(anchors.f_u_i[i], f);
            CHECK(hits);
        }
}

TEST_CASE("face tracing validates rotations") {
    // A rotation listing a dart at the wrong vertex is rejected.
    SimpleGraph tri = catalog::cycle_graph(3);
    std::vector<std::vector<int>> bad{{0, 2}, {1, 5}, {3, 4}};
    CHECK_THROWS_AS(RotationSystem(3, tri.edges(), bad), Error);
}
