#include "ccrit/embed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace ccrit {

RotationSystem::RotationSystem(int vertex_count, std::vector<VertexPair> edges, std::vector<std::vector<int>> rot)
    : n_(vertex_count), edges_(std::move(edges)), rot_(std::move(rot)) {
    if (static_cast<int>(rot_.size()) != n_) throw Error(ErrorCode::CorruptRotation, "rotation size mismatch");
    std::vector<int> seen(2 * edges_.size(), 0);
    for (int v = 0; v < n_; ++v) {
        for (int d : rot_[v]) {
            if (d < 0 || d >= 2 * edge_count()) throw Error(ErrorCode::CorruptRotation, "dart out of range");
            if (tail(d) != v) throw Error(ErrorCode::CorruptRotation, "dart listed at wrong vertex");
            if (seen[d]++) throw Error(ErrorCode::CorruptRotation, "dart listed twice");
        }
    }
    for (int d = 0; d < 2 * edge_count(); ++d)
        if (!seen[d]) throw Error(ErrorCode::CorruptRotation, "dart missing from rotation");
    build_rot_next();
}

void RotationSystem::build_rot_next() {
    rot_next_.assign(2 * edge_count(), -1);
    for (int v = 0; v < n_; ++v) {
        const auto& lst = rot_[v];
        for (size_t i = 0; i < lst.size(); ++i) rot_next_[lst[i]] = lst[(i + 1) % lst.size()];
    }
}

RotationSystem RotationSystem::mirrored() const {
    std::vector<std::vector<int>> rev = rot_;
    for (auto& lst : rev) std::reverse(lst.begin(), lst.end());
    return RotationSystem(n_, edges_, std::move(rev));
}

std::vector<std::vector<int>> RotationSystem::neighbor_orders() const {
    std::vector<std::vector<int>> out(n_);
    for (int v = 0; v < n_; ++v)
        for (int d : rot_[v]) out[v].push_back(head(d));
    return out;
}

std::vector<int> FaceSet::faces_at_vertex(int v) const {
    std::set<int> fs;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        if (edges[e].a == v) fs.insert(face_of_dart[2 * e]);
        if (edges[e].b == v) fs.insert(face_of_dart[2 * e + 1]);
    }
    return {fs.begin(), fs.end()};
}

namespace {

// Trace the face cycle through `start` by repeated face_next.
std::vector<int> trace_face(const RotationSystem& rs, int start) {
    std::vector<int> cycle;
    int d = start;
    do {
        cycle.push_back(d);
        d = rs.face_next(d);
        if (cycle.size() > 2 * static_cast<size_t>(rs.edge_count()))
            throw Error(ErrorCode::CorruptRotation, "face trace does not close");
    } while (d != start);
    return cycle;
}

std::vector<std::vector<int>> all_face_cycles(const RotationSystem& rs) {
    std::vector<std::vector<int>> cycles;
    std::vector<bool> used(2 * rs.edge_count(), false);
    for (int d = 0; d < 2 * rs.edge_count(); ++d) {
        if (used[d]) continue;
        std::vector<int> cycle = trace_face(rs, d);
        for (int x : cycle) {
            if (used[x]) throw Error(ErrorCode::CorruptRotation, "dart on two face cycles");
            used[x] = true;
        }
        // Rotate so the smallest dart leads; darts partition over faces, so
        // the leading dart orders faces canonically.
        auto it = std::min_element(cycle.begin(), cycle.end());
        std::rotate(cycle.begin(), it, cycle.end());
        cycles.push_back(std::move(cycle));
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& x, const auto& y) { return x[0] < y[0]; });
    return cycles;
}

// Dart wanted by the canonical-reflection rule: smallest dart at the
// smallest vertex that has any.
int canonical_start_dart(const RotationSystem& rs) {
    for (int v = 0; v < rs.vertex_count(); ++v) {
        int best = -1;
        for (int d : rs.rotations()[v])
            if (best < 0 || d < best) best = d;
        if (best >= 0) return best;
    }
    throw Error(ErrorCode::CorruptRotation, "empty rotation system");
}

RotationSystem canonical_reflection(RotationSystem rs) {
    if (rs.edge_count() == 0) return rs;
    RotationSystem mir = rs.mirrored();
    int d0 = canonical_start_dart(rs);
    std::vector<int> f1 = trace_face(rs, d0);
    std::vector<int> f2 = trace_face(mir, d0);
    if (f2 < f1) return mir;
    if (f1 < f2) return rs;
    if (all_face_cycles(mir) < all_face_cycles(rs)) return mir;
    return rs;
}

}  // namespace

PlanarityCheck check_planarity(const SimpleGraph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                              boost::property<boost::edge_index_t, int>>;
    BoostGraph bg(g.vertex_count());
    std::vector<BoostGraph::edge_descriptor> descs(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e)
        descs[e] = boost::add_edge(g.edge(e).a, g.edge(e).b, {e}, bg).first;

    std::vector<std::vector<BoostGraph::edge_descriptor>> embedding(g.vertex_count());
    std::vector<BoostGraph::edge_descriptor> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

    PlanarityCheck out;
    out.planar = planar;
    if (!planar) {
        for (auto& ed : kuratowski)
            out.kuratowski_edges.emplace_back(static_cast<int>(boost::source(ed, bg)),
                                              static_cast<int>(boost::target(ed, bg)));
        std::sort(out.kuratowski_edges.begin(), out.kuratowski_edges.end());
        out.kuratowski_edges.erase(std::unique(out.kuratowski_edges.begin(), out.kuratowski_edges.end()),
                                   out.kuratowski_edges.end());
    }
    return out;
}

RotationSystem planar_embedding(const SimpleGraph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                              boost::property<boost::edge_index_t, int>>;
    BoostGraph bg(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) boost::add_edge(g.edge(e).a, g.edge(e).b, {e}, bg);

    std::vector<std::vector<BoostGraph::edge_descriptor>> embedding(g.vertex_count());
    std::vector<BoostGraph::edge_descriptor> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding =
            boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!planar) {
        std::set<std::pair<int, int>> ked;
        for (auto& ed : kuratowski)
            ked.insert({std::min<int>(boost::source(ed, bg), boost::target(ed, bg)),
                        std::max<int>(boost::source(ed, bg), boost::target(ed, bg))});
        std::string msg = "Kuratowski subdivision edges:";
        for (auto& [a, b] : ked) msg += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        throw Error(ErrorCode::NotPlanar, msg);
    }

    auto index = boost::get(boost::edge_index, bg);
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (auto& ed : embedding[v]) {
            int e = index[ed];
            rot[v].push_back(2 * e + (g.edge(e).a == v ? 0 : 1));
        }
    }
    return canonical_reflection(RotationSystem(g.vertex_count(), g.edges(), std::move(rot)));
}

FaceSet faces(const RotationSystem& rs) {
    FaceSet fs;
    fs.vertex_count = rs.vertex_count();
    fs.edges = rs.edges();
    fs.cycles = all_face_cycles(rs);
    fs.face_of_dart.assign(2 * rs.edge_count(), -1);
    for (int f = 0; f < fs.face_count(); ++f)
        for (int d : fs.cycles[f]) fs.face_of_dart[d] = f;
    // Euler only holds for connected graphs, which is all this pipeline
    // embeds; a disconnected or corrupt rotation fails here.
    if (rs.vertex_count() - rs.edge_count() + fs.face_count() != 2)
        throw Error(ErrorCode::CorruptRotation,
                    "Euler check failed: V=" + std::to_string(rs.vertex_count()) + " E=" +
                        std::to_string(rs.edge_count()) + " F=" + std::to_string(fs.face_count()));
    return fs;
}

DualGraph dual_graph(const FaceSet& fs) {
    DualGraph dual;
    dual.graph.n = fs.face_count();
    dual.graph.edges.reserve(fs.edges.size());
    for (int e = 0; e < static_cast<int>(fs.edges.size()); ++e) {
        auto [f1, f2] = fs.faces_of_edge(e);
        if (f1 == f2)
            throw Error(ErrorCode::NotTwoConnected,
                        "edge (" + std::to_string(fs.edges[e].a) + "," + std::to_string(fs.edges[e].b) +
                            ") is a bridge; dual would have a loop");
        dual.graph.edges.emplace_back(f1, f2);
    }
    dual.rotation_edges.resize(fs.face_count());
    for (int f = 0; f < fs.face_count(); ++f)
        for (int d : fs.cycles[f]) dual.rotation_edges[f].push_back(d >> 1);
    return dual;
}

RotationSystem DualGraph::rotation_system() const {
    // Duals are loopless, so each face is one distinct endpoint of every
    // incident dual edge and the dart choice is forced.
    std::vector<std::vector<int>> rot(graph.n);
    for (int f = 0; f < graph.n; ++f)
        for (int e : rotation_edges[f]) rot[f].push_back(2 * e + (graph.edges[e].a == f ? 0 : 1));
    return RotationSystem(graph.n, graph.edges, std::move(rot));
}

AnchorFaces anchor_faces(const FaceSet& fs, const std::array<int, 3>& u_nbrs, const std::array<int, 3>& v_nbrs) {
    auto faces_of_triple = [&](const std::array<int, 3>& nbrs) {
        std::vector<int> common = fs.faces_at_vertex(nbrs[0]);
        for (int i = 1; i < 3; ++i) {
            std::vector<int> next = fs.faces_at_vertex(nbrs[i]);
            std::vector<int> inter;
            std::set_intersection(common.begin(), common.end(), next.begin(), next.end(), std::back_inserter(inter));
            common = std::move(inter);
        }
        return common;
    };

    std::vector<int> common_u = faces_of_triple(u_nbrs);
    std::vector<int> common_v = faces_of_triple(v_nbrs);

    // A face seeing all six neighbors hosts both terminals, so uv could be
    // drawn without crossings: the input graph was planar after all.
    std::vector<int> both;
    std::set_intersection(common_u.begin(), common_u.end(), common_v.begin(), common_v.end(),
                          std::back_inserter(both));
    if (!both.empty())
        throw Error(ErrorCode::GNotNonplanar,
                    "face " + std::to_string(both[0]) + " is incident with all six terminal neighbors");
    if (common_u.size() != 1)
        throw Error(ErrorCode::AnchorAmbiguous,
                    "u-side neighbors share " + std::to_string(common_u.size()) + " faces");
    if (common_v.size() != 1)
        throw Error(ErrorCode::AnchorAmbiguous,
                    "v-side neighbors share " + std::to_string(common_v.size()) + " faces");

    AnchorFaces out;
    out.f_u = common_u[0];
    out.f_v = common_v[0];
    out.u_neighbors = u_nbrs;
    out.v_neighbors = v_nbrs;

    auto other_face = [&](int vertex, int f_terminal, const char* side) {
        std::vector<int> at = fs.faces_at_vertex(vertex);
        if (at.size() != 2)
            throw Error(ErrorCode::AnchorAmbiguous, std::string(side) + "-neighbor " + std::to_string(vertex) +
                                                        " is incident with " + std::to_string(at.size()) +
                                                        " faces, expected 2");
        return at[0] == f_terminal ? at[1] : at[0];
    };
    for (int i = 0; i < 3; ++i) {
        out.f_u_i[i] = other_face(u_nbrs[i], out.f_u, "u");
        out.f_v_i[i] = other_face(v_nbrs[i], out.f_v, "v");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (out.f_u_i[i] == out.f_u_i[j])
                throw Error(ErrorCode::DegenerateAnchors, "F_u_" + std::to_string(i + 1) + " = F_u_" +
                                                              std::to_string(j + 1) + "; anchors degenerate");
            if (out.f_v_i[i] == out.f_v_i[j])
                throw Error(ErrorCode::DegenerateAnchors, "F_v_" + std::to_string(i + 1) + " = F_v_" +
                                                              std::to_string(j + 1) + "; anchors degenerate");
        }
    return out;
}

IntegerWeighting transfer_weights(const IntegerWeighting& w, const DualGraph& dual) {
    require_positive_weights(w, dual.graph.edge_count());
    return w;
}

IntegerWeighting transfer_weights_to_primal(const IntegerWeighting& w_star, int primal_edge_count) {
    require_positive_weights(w_star, primal_edge_count);
    return w_star;
}

ShortestPaths dijkstra(const MultiEdgeGraph& g, const IntegerWeighting& w, int source,
                       const std::vector<bool>* forbidden_edges) {
    require_positive_weights(w, g.edge_count());
    auto adj = g.adjacency();
    ShortestPaths sp;
    sp.dist.assign(g.n, 0);
    sp.pred_edge.assign(g.n, -1);
    sp.reached.assign(g.n, 0);
    std::vector<char> done(g.n, 0);
    sp.reached[source] = 1;

    for (int round = 0; round < g.n; ++round) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (sp.reached[v] && !done[v] && (best < 0 || sp.dist[v] < sp.dist[best])) best = v;
        if (best < 0) break;
        done[best] = 1;
        for (auto& [to, e] : adj[best]) {
            if (forbidden_edges && (*forbidden_edges)[e]) continue;
            Int cand = sp.dist[best] + w[e];
            if (!sp.reached[to] || cand < sp.dist[to]) {
                sp.reached[to] = 1;
                sp.dist[to] = cand;
                sp.pred_edge[to] = e;
            }
        }
    }
    return sp;
}

DistanceTable all_pairs_distances(const DualGraph& dual, const IntegerWeighting& w_star, const AnchorFaces& anchors) {
    const int nf = dual.graph.n;
    DistanceTable dt;
    dt.anchors = anchors;
    dt.face_dist.resize(nf);
    for (int f = 0; f < nf; ++f) {
        ShortestPaths sp = dijkstra(dual.graph, w_star, f);
        for (int g = 0; g < nf; ++g)
            if (!sp.reached[g]) throw Error(ErrorCode::CorruptRotation, "dual is disconnected");
        dt.face_dist[f] = std::move(sp.dist);
    }
    for (int i = 0; i < 3; ++i) {
        dt.u_terminal_dist[i].resize(nf);
        dt.v_terminal_dist[i].resize(nf);
        for (int f = 0; f < nf; ++f) {
            dt.u_terminal_dist[i][f] = std::min(dt.face_dist[anchors.f_u][f], dt.face_dist[anchors.f_u_i[i]][f]);
            dt.v_terminal_dist[i][f] = std::min(dt.face_dist[anchors.f_v][f], dt.face_dist[anchors.f_v_i[i]][f]);
        }
    }
    return dt;
}

}  // namespace ccrit
