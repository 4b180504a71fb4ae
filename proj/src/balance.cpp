#include "ccrit/balance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ccrit/embed.hpp"

namespace ccrit {

std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        if (a[i].size() != n || b.size() != n) throw Error(ErrorCode::BalanceFailed, "linear system shape mismatch");

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw Error(ErrorCode::BalanceFailed, "singular Laplacian system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rat factor = a[row][col] / a[col][col];
            for (size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rat> x(n);
    for (size_t i = n; i-- > 0;) {
        Rat sum = b[i];
        for (size_t k = i + 1; k < n; ++k) sum -= a[i][k] * x[k];
        x[i] = sum / a[i][i];
    }
    return x;
}

namespace {

// Harmonic extension with an arbitrary pinned boundary (vertex -> value).
std::vector<Rat> harmonic_extension(const MultiEdgeGraph& g, const std::map<int, Rat>& boundary) {
    std::vector<int> row_of(g.n, -1);
    std::vector<int> interior;
    for (int v = 0; v < g.n; ++v) {
        if (!boundary.count(v)) {
            row_of[v] = static_cast<int>(interior.size());
            interior.push_back(v);
        }
    }
    const size_t m = interior.size();
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m, Rat(0)));
    std::vector<Rat> b(m, Rat(0));
    auto adj = g.adjacency();
    for (size_t i = 0; i < m; ++i) {
        int v = interior[i];
        a[i][i] = Rat(static_cast<int>(adj[v].size()));
        for (auto& [w, e] : adj[v]) {
            if (row_of[w] >= 0)
                a[i][row_of[w]] -= 1;
            else
                b[i] += boundary.at(w);
        }
    }
    std::vector<Rat> x = m ? solve_rational(std::move(a), std::move(b)) : std::vector<Rat>{};
    std::vector<Rat> out(g.n);
    for (auto& [v, val] : boundary) out[v] = val;
    for (size_t i = 0; i < m; ++i) out[interior[i]] = x[i];
    return out;
}

// Adjacent pairs at equal positions, the only obstruction to positive
// lengths.
std::vector<VertexPair> coincident_adjacent_pairs(const MultiEdgeGraph& g, const std::vector<Rat>& pos) {
    std::set<VertexPair> pairs;
    for (const VertexPair& e : g.edges)
        if (pos[e.a] == pos[e.b]) pairs.insert(e);
    return {pairs.begin(), pairs.end()};
}

// Isomorphism-covariant vertex ranking: iterated refinement seeded with the
// exact position, terminal flags and degree; neighbour multisets refine.
// Vertices left tied are structurally indistinguishable at this depth, and id
// order breaks the remaining ties deterministically.
std::vector<int> refinement_ranks(const MultiEdgeGraph& g, const std::vector<Rat>& pos, int s, int t) {
    auto adj = g.adjacency();
    std::vector<int> rank(g.n);
    {
        std::map<std::string, std::vector<int>> initial;
        for (int v = 0; v < g.n; ++v) {
            std::string key = (v == s ? "s|" : v == t ? "t|" : "i|");
            key += std::to_string(adj[v].size()) + "|" + to_fraction(pos[v]);
            initial[key].push_back(v);
        }
        int next = 0;
        for (auto& [key, vs] : initial) {
            for (int v : vs) rank[v] = next;
            ++next;
        }
    }
    for (int round = 0; round < g.n; ++round) {
        std::map<std::pair<int, std::vector<int>>, std::vector<int>> refined;
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> sig;
            sig.reserve(adj[v].size());
            for (auto& [w, e] : adj[v]) sig.push_back(rank[w]);
            std::sort(sig.begin(), sig.end());
            refined[{rank[v], std::move(sig)}].push_back(v);
        }
        std::vector<int> next_rank(g.n);
        int next = 0;
        for (auto& [key, vs] : refined) {
            for (int v : vs) next_rank[v] = next;
            ++next;
        }
        if (next_rank == rank) break;
        rank = std::move(next_rank);
    }
    return rank;
}

struct ScaledWeights {
    IntegerWeighting weights;
    Int scale;  // LCM of the position denominators
};

ScaledWeights scale_positions(const MultiEdgeGraph& g, const std::vector<Rat>& pos) {
    ScaledWeights out;
    out.scale = denominator_lcm(pos);
    out.weights.reserve(g.edge_count());
    for (const VertexPair& e : g.edges) {
        Rat diff = pos[e.a] - pos[e.b];
        if (diff < 0) diff = -diff;
        Rat scaled = diff * Rat(out.scale);
        if (scaled.get_den() != 1) throw Error(ErrorCode::BalanceFailed, "scaling did not clear denominators");
        out.weights.push_back(Int(scaled.get_num()));
    }
    return out;
}

// Walk monotonically from `from` towards the position of `target_value`
// (0 = descend to s, 1 = ascend to t). Returns empty on a stall.
std::vector<int> monotone_walk(const MultiEdgeGraph& g, const std::vector<Rat>& pos, int from, bool descend) {
    auto adj = g.adjacency();
    std::vector<int> path{from};
    int cur = from;
    while ((descend && pos[cur] != 0) || (!descend && pos[cur] != 1)) {
        // Smallest step first, then smallest vertex id: deterministic, and
        // strict monotonicity keeps the walk a path.
        int best = -1;
        for (auto& [w, e] : adj[cur]) {
            bool improves = descend ? pos[w] < pos[cur] : pos[w] > pos[cur];
            if (!improves) continue;
            if (best < 0) {
                best = w;
                continue;
            }
            bool closer = descend ? pos[w] > pos[best] : pos[w] < pos[best];
            if (closer || (pos[w] == pos[best] && w < best)) best = w;
        }
        if (best < 0) return {};
        path.push_back(best);
        cur = best;
        if (path.size() > static_cast<size_t>(g.n)) return {};
    }
    return path;
}

}  // namespace

HarmonicPositions harmonic_positions(const MultiEdgeGraph& g, int s, int t) {
    if (s == t) throw Error(ErrorCode::BalanceFailed, "terminals coincide");
    std::map<int, Rat> boundary{{s, Rat(0)}, {t, Rat(1)}};
    HarmonicPositions hp;
    hp.s = s;
    hp.t = t;
    hp.position = harmonic_extension(g, boundary);
    for (int v = 0; v < g.n; ++v)
        if (hp.position[v] < 0 || hp.position[v] > 1)
            throw Error(ErrorCode::BalanceFailed, "harmonic position outside [0,1]");
    return hp;
}

BalancedCertificate balanced_weights(const MultiEdgeGraph& g, int s, int t, int max_perturb_rounds) {
    HarmonicPositions hp = harmonic_positions(g, s, t);
    std::vector<Rat> pos = hp.position;

    for (int round = 0; round <= max_perturb_rounds; ++round) {
        std::vector<VertexPair> pairs = coincident_adjacent_pairs(g, pos);
        if (pairs.empty()) {
            ScaledWeights sw = scale_positions(g, pos);
            BalanceReport report = verify_balanced(g, sw.weights, s, t);
            if (report.balanced) {
                BalancedCertificate cert;
                cert.weights = std::move(sw.weights);
                cert.terminal_distance = report.terminal_distance;
                cert.perturbation_rounds = round;
                for (int e = 0; e < g.edge_count(); ++e) {
                    int lo = g.edges[e].a, hi = g.edges[e].b;
                    if (pos[lo] > pos[hi]) std::swap(lo, hi);
                    std::vector<int> down = monotone_walk(g, pos, lo, true);
                    std::vector<int> up = monotone_walk(g, pos, hi, false);
                    if (down.empty() || up.empty())
                        throw Error(ErrorCode::BalanceFailed, "witness recovery stalled after verification");
                    PathWitness w;
                    w.edge = e;
                    w.vertices.assign(down.rbegin(), down.rend());
                    w.vertices.insert(w.vertices.end(), up.begin(), up.end());
                    // Sanity: the witness must telescope to exactly D.
                    Int total = 0;
                    for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
                        Rat diff = pos[w.vertices[i + 1]] - pos[w.vertices[i]];
                        if (diff < 0) diff = -diff;
                        total += Int(Rat(diff * Rat(sw.scale)).get_num());
                    }
                    if (total != cert.terminal_distance)
                        throw Error(ErrorCode::BalanceFailed, "witness weight mismatch");
                    cert.witnesses.push_back(std::move(w));
                }
                return cert;
            }
            // Verification failed with all positions distinct: perturb again,
            // seeding from the failing edges.
            pairs.clear();
            for (int e : report.failing_edges) pairs.push_back(g.edges[e]);
            if (pairs.empty()) throw Error(ErrorCode::BalanceFailed, "verification failed without failing edges");
        }
        if (round == max_perturb_rounds) break;

        // Choose the perturbed boundary source canonically among non-terminal
        // endpoints of the obstructing pairs.
        std::vector<int> ranks = refinement_ranks(g, pos, s, t);
        int source = -1;
        for (const VertexPair& p : pairs)
            for (int cand : {p.a, p.b}) {
                if (cand == s || cand == t) continue;
                if (source < 0 || ranks[cand] < ranks[source] ||
                    (ranks[cand] == ranks[source] && cand < source))
                    source = cand;
            }
        if (source < 0) throw Error(ErrorCode::BalanceFailed, "no perturbable vertex in obstructing pairs");

        std::map<int, Rat> boundary{{s, Rat(0)}, {t, Rat(0)}, {source, Rat(1)}};
        std::vector<Rat> rho = harmonic_extension(g, boundary);

        std::vector<Rat> all = pos;
        all.insert(all.end(), rho.begin(), rho.end());
        Int delta = denominator_lcm(all);
        // epsilon_k = 1 / (2^k * n * Delta): small enough that separated
        // pairs stay separated and positions stay inside [0,1].
        Rat eps = Rat(1) / (Rat(Int(1) << (round + 1)) * Rat(g.n) * Rat(delta));
        for (int v = 0; v < g.n; ++v) pos[v] += eps * rho[v];
    }
    throw Error(ErrorCode::BalanceFailed,
                "perturbation budget (" + std::to_string(max_perturb_rounds) + " rounds) exhausted");
}

BalanceReport verify_balanced(const MultiEdgeGraph& g, const IntegerWeighting& w, int s, int t) {
    require_positive_weights(w, g.edge_count());
    ShortestPaths from_s = dijkstra(g, w, s);
    ShortestPaths from_t = dijkstra(g, w, t);
    if (!from_s.reached[t]) throw Error(ErrorCode::BalanceFailed, "terminals are disconnected");

    BalanceReport report;
    report.terminal_distance = from_s.dist[t];
    for (int e = 0; e < g.edge_count(); ++e) {
        int a = g.edges[e].a, b = g.edges[e].b;
        Int through_ab = from_s.dist[a] + w[e] + from_t.dist[b];
        Int through_ba = from_s.dist[b] + w[e] + from_t.dist[a];
        if (std::min(through_ab, through_ba) != report.terminal_distance) report.failing_edges.push_back(e);
    }
    report.balanced = report.failing_edges.empty();
    return report;
}

}  // namespace ccrit
