#include "ccrit/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace ccrit {

namespace {

int count_reachable(const std::vector<std::vector<int>>& adj, int start, const std::vector<bool>& removed,
                    std::vector<int>* component = nullptr) {
    std::vector<bool> seen(adj.size(), false);
    std::queue<int> q;
    q.push(start);
    seen[start] = true;
    int count = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        ++count;
        if (component) component->push_back(v);
        for (int w : adj[v]) {
            if (!seen[w] && !removed[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    return count;
}

std::vector<std::vector<int>> simple_adjacency(const MultiEdgeGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const VertexPair& e : g.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    return adj;
}

// Unit-capacity max flow (BFS augmenting paths), enough for counting a
// handful of disjoint paths on desk-scale graphs.
class UnitFlow {
  public:
    explicit UnitFlow(int node_count) : head_(node_count, -1) {}

    void add_edge(int from, int to, int capacity) {
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow_up_to(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && augment(s, t)) ++flow;
        return flow;
    }

  private:
    struct Arc {
        int to;
        int next;
        int cap;
    };

    bool augment(int s, int t) {
        std::vector<int> pred_arc(head_.size(), -1);
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty() && !seen[t]) {
            int v = q.front();
            q.pop();
            for (int a = head_[v]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    pred_arc[arcs_[a].to] = a;
                    q.push(arcs_[a].to);
                }
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int a = pred_arc[v];
            arcs_[a].cap -= 1;
            arcs_[a ^ 1].cap += 1;
            v = arcs_[a ^ 1].to;
        }
        return true;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

// Internally disjoint x-y paths via vertex splitting: v -> (v_in, v_out).
int disjoint_paths_up_to(const SimpleGraph& g, int x, int y, int limit) {
    const int n = g.vertex_count();
    UnitFlow flow(2 * n);
    auto in = [](int v) { return 2 * v; };
    auto out = [](int v) { return 2 * v + 1; };
    for (int v = 0; v < n; ++v) flow.add_edge(in(v), out(v), v == x || v == y ? limit : 1);
    for (const VertexPair& e : g.edges()) {
        flow.add_edge(out(e.a), in(e.b), 1);
        flow.add_edge(out(e.b), in(e.a), 1);
    }
    return flow.max_flow_up_to(out(x), in(y), limit);
}

}  // namespace

bool is_connected(const MultiEdgeGraph& g) {
    if (g.n == 0) return false;
    std::vector<bool> removed(g.n, false);
    return count_reachable(simple_adjacency(g), 0, removed) == g.n;
}

bool is_connected(const SimpleGraph& g) {
    MultiEdgeGraph m{g.vertex_count(), g.edges()};
    return is_connected(m);
}

bool is_two_connected(const MultiEdgeGraph& g) {
    if (g.n < 2 || g.edges.empty()) return false;
    auto adj = simple_adjacency(g);
    std::vector<bool> removed(g.n, false);
    if (count_reachable(adj, 0, removed) != g.n) return false;
    if (g.n == 2) return true;
    for (int v = 0; v < g.n; ++v) {
        removed[v] = true;
        int start = v == 0 ? 1 : 0;
        if (count_reachable(adj, start, removed) != g.n - 1) return false;
        removed[v] = false;
    }
    return true;
}

bool vertex_connectivity_at_least(const SimpleGraph& g, int k) {
    const int n = g.vertex_count();
    if (k <= 0) return true;
    if (n <= k) return false;  // kappa(G) <= n-1
    if (!is_connected(g)) return false;
    bool complete = g.edge_count() == n * (n - 1) / 2;
    if (complete) return n - 1 >= k;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!g.has_edge(x, y) && disjoint_paths_up_to(g, x, y, k) < k) return false;
    return true;
}

bool is_internally_three_connected(const SimpleGraph& g, std::optional<TwoSeparationWitness>* witness) {
    if (witness) witness->reset();
    const int n = g.vertex_count();
    MultiEdgeGraph m{n, g.edges()};
    if (!is_two_connected(m)) return false;

    std::vector<std::vector<int>> adj(n);
    for (const VertexPair& e : g.edges()) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            std::vector<bool> removed(n, false);
            removed[a] = removed[b] = true;
            // Components of G - {a,b}.
            std::vector<std::vector<int>> comps;
            std::vector<bool> seen(n, false);
            for (int v = 0; v < n; ++v) {
                if (v == a || v == b || seen[v]) continue;
                std::vector<int> comp;
                count_reachable(adj, v, removed, &comp);
                for (int w : comp) seen[w] = true;
                comps.push_back(std::move(comp));
            }
            const int k = static_cast<int>(comps.size());
            if (k < 2) continue;

            // Edge count of the side spanned by a component group: edges with
            // at least one end inside the group. The edge ab, if present, may
            // be assigned to either side.
            auto side_edges = [&](const std::vector<bool>& in_group) {
                std::vector<VertexPair> out;
                for (const VertexPair& e : g.edges())
                    if ((e.a != a && e.a != b && in_group[e.a]) || (e.b != a && e.b != b && in_group[e.b]))
                        out.push_back(e);
                return out;
            };

            // ab_side: 0 = unassigned, 1 or 2 = side holding the ab edge.
            auto record = [&](const std::vector<bool>& in_group, const std::vector<bool>& other, int ab_side) {
                if (!witness) return;
                TwoSeparationWitness w;
                w.a = a;
                w.b = b;
                for (int v = 0; v < n; ++v) {
                    if (v == a || v == b) continue;
                    (in_group[v] ? w.side1_vertices : w.side2_vertices).push_back(v);
                }
                w.side1_edges = side_edges(in_group);
                w.side2_edges = side_edges(other);
                if (ab_side == 1) w.side1_edges.emplace_back(a, b);
                if (ab_side == 2) w.side2_edges.emplace_back(a, b);
                *witness = std::move(w);
            };

            bool has_ab = g.has_edge(a, b);
            auto group_masks = [&](int mask, std::vector<bool>& in_group, std::vector<bool>& other) {
                in_group.assign(n, false);
                other.assign(n, false);
                for (int i = 0; i < k; ++i)
                    for (int v : comps[i]) (mask & (1 << i) ? in_group : other)[v] = true;
            };

            std::vector<bool> in_group, other;
            if (k >= 6) {
                // 2-connectivity gives every component >= 2 incident edges, so
                // a 3/3 component split always violates.
                group_masks((1 << 3) - 1, in_group, other);
                record(in_group, other, 0);
                return false;
            }
            for (int mask = 1; mask < (1 << k) - 1; ++mask) {
                if (!(mask & 1)) continue;  // fix component 0 on side 1 to halve the work
                group_masks(mask, in_group, other);
                size_t e1 = side_edges(in_group).size();
                size_t e2 = side_edges(other).size();
                if (e1 >= 3 && e2 >= 3) {
                    record(in_group, other, 0);
                    return false;
                }
                if (has_ab && e1 + 1 >= 3 && e2 >= 3) {
                    record(in_group, other, 1);
                    return false;
                }
                if (has_ab && e1 >= 3 && e2 + 1 >= 3) {
                    record(in_group, other, 2);
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace ccrit
