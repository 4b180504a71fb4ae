#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ccrit/graph.hpp"

namespace ccrit {

// Combinatorial embedding as a rotation system. Each edge e owns two darts
// 2e (oriented edge(e).a -> edge(e).b) and 2e+1 (the reverse); rot[v] lists
// the darts with tail v in cyclic order. Parallel edges are allowed, so this
// also represents embedded duals.
class RotationSystem {
  public:
    RotationSystem() = default;
    RotationSystem(int vertex_count, std::vector<VertexPair> edges, std::vector<std::vector<int>> rot);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& rotations() const { return rot_; }

    int tail(int dart) const {
        const VertexPair& e = edges_[dart >> 1];
        return (dart & 1) ? e.b : e.a;
    }
    int head(int dart) const { return tail(dart ^ 1); }

    // Next dart of the face containing `dart`: rotation successor of its twin.
    int face_next(int dart) const { return rot_next_[dart ^ 1]; }

    RotationSystem mirrored() const;

    // As per-vertex neighbor orders; only meaningful for simple graphs.
    std::vector<std::vector<int>> neighbor_orders() const;

  private:
    void build_rot_next();

    int n_ = 0;
    std::vector<VertexPair> edges_;
    std::vector<std::vector<int>> rot_;
    std::vector<int> rot_next_;
};

struct FaceSet {
    // Face cycles as dart sequences, rotated so the smallest dart id leads,
    // sorted by that leading dart. Face ids are indices into `cycles`.
    std::vector<std::vector<int>> cycles;
    std::vector<int> face_of_dart;
    int vertex_count = 0;
    std::vector<VertexPair> edges;  // primal edges, copied from the rotation system

    int face_count() const { return static_cast<int>(cycles.size()); }
    // The two faces incident with edge e (equal only for bridges).
    std::pair<int, int> faces_of_edge(int e) const { return {face_of_dart[2 * e], face_of_dart[2 * e + 1]}; }
    std::vector<int> faces_at_vertex(int v) const;
};

// Dual: one vertex per face, one dual edge e* per primal edge e, sharing e's
// id. Parallel dual edges arise at degree-2 primal vertices and are kept.
struct DualGraph {
    MultiEdgeGraph graph;
    // Dual rotation: for each face, the incident primal edge ids in face
    // cycle order (gives the embedding of the dual).
    std::vector<std::vector<int>> rotation_edges;

    RotationSystem rotation_system() const;
};

struct AnchorFaces {
    int f_u = -1;
    int f_v = -1;
    std::array<int, 3> u_neighbors{};  // core vertex ids
    std::array<int, 3> v_neighbors{};
    std::array<int, 3> f_u_i{};  // the non-F_u face at u_i
    std::array<int, 3> f_v_i{};
};

struct DistanceTable {
    std::vector<std::vector<Int>> face_dist;          // all face pairs
    std::array<std::vector<Int>, 3> u_terminal_dist;  // d(u_i, F) per face
    std::array<std::vector<Int>, 3> v_terminal_dist;
    AnchorFaces anchors;

    const Int& d(int f, int g) const { return face_dist[f][g]; }
    const Int& du(int i, int f) const { return u_terminal_dist[i][f]; }
    const Int& dv(int i, int f) const { return v_terminal_dist[i][f]; }
    int face_count() const { return static_cast<int>(face_dist.size()); }
};

struct PlanarityCheck {
    bool planar = false;
    std::vector<VertexPair> kuratowski_edges;  // witness when nonplanar
};

PlanarityCheck check_planarity(const SimpleGraph& g);

// Exact planarity test + embedding; deterministic for a fixed input order,
// with the reflection fixed by a canonical rule. Throws NotPlanar.
RotationSystem planar_embedding(const SimpleGraph& g);

// Face tracing; asserts Euler's formula. Throws CorruptRotation.
FaceSet faces(const RotationSystem& rs);

DualGraph dual_graph(const FaceSet& fs);

AnchorFaces anchor_faces(const FaceSet& fs, const std::array<int, 3>& u_nbrs, const std::array<int, 3>& v_nbrs);

// w*(e*) = w(e) under the id-sharing bijection (validating sizes).
IntegerWeighting transfer_weights(const IntegerWeighting& w, const DualGraph& dual);
IntegerWeighting transfer_weights_to_primal(const IntegerWeighting& w_star, int primal_edge_count);

struct ShortestPaths {
    std::vector<Int> dist;
    std::vector<int> pred_edge;  // -1 at sources/unreached
    std::vector<char> reached;
};

// Exact Dijkstra over big integers; O(V^2) vertex selection, deterministic.
ShortestPaths dijkstra(const MultiEdgeGraph& g, const IntegerWeighting& w, int source,
                       const std::vector<bool>* forbidden_edges = nullptr);

DistanceTable all_pairs_distances(const DualGraph& dual, const IntegerWeighting& w_star, const AnchorFaces& anchors);

}  // namespace ccrit
