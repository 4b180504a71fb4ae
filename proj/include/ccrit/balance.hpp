#pragma once

#include <vector>

#include "ccrit/graph.hpp"

namespace ccrit {

struct HarmonicPositions {
    std::vector<Rat> position;  // one per vertex, in [0,1]
    int s = -1;
    int t = -1;
};

struct PathWitness {
    int edge = -1;
    std::vector<int> vertices;  // s ... t, using the edge
};

struct BalancedCertificate {
    IntegerWeighting weights;
    Int terminal_distance;  // D
    std::vector<PathWitness> witnesses;
    int perturbation_rounds = 0;
};

struct BalanceReport {
    bool balanced = false;
    Int terminal_distance;
    std::vector<int> failing_edges;
};

// Exact rational solve of A x = b by Gaussian elimination; A must be square
// and nonsingular. Exposed for oracle tests.
std::vector<Rat> solve_rational(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

// Rubber-band positions: s pinned at 0, t at 1, every other vertex at the
// average of its neighbours (with multiplicity). Exact.
HarmonicPositions harmonic_positions(const MultiEdgeGraph& g, int s, int t);

// Lemma-2 construction: positions -> perturbation of coincident adjacent
// pairs -> |position difference| lengths -> LCM scaling, gated by
// verify_balanced. Throws BalanceFailed when the round budget is exhausted.
BalancedCertificate balanced_weights(const MultiEdgeGraph& g, int s, int t, int max_perturb_rounds = 32);

// An edge (a,b) passes iff min(d(s,a)+w+d(b,t), d(s,b)+w+d(a,t)) = d(s,t).
BalanceReport verify_balanced(const MultiEdgeGraph& g, const IntegerWeighting& w, int s, int t);

}  // namespace ccrit
