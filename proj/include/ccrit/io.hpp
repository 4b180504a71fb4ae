#pragma once

#include <optional>
#include <string>

#include "ccrit/certify.hpp"
#include "ccrit/hypotheses.hpp"
#include "ccrit/synth.hpp"

namespace ccrit {

struct GraphDocument {
    int version = 1;
    SimpleGraph graph;
    std::optional<VertexPair> uv;
    std::optional<IntegerWeighting> weights;         // by edge id of `graph`
    std::optional<std::vector<Int>> multiplicities;  // by edge id of `graph`

    Multigraph as_multigraph() const;
};

struct SeedOrderInfo {
    unsigned long long seed = 0;
    std::vector<int> permutation;  // original vertex v was relabeled to permutation[v]
};

struct CertificateDocument {
    int version = 1;
    std::string tool_name;
    std::string tool_version;
    SynthesisCertificate certificate;
    ConditionReport conditions;
    CriticalityReport criticality;
    LowerBoundReport lower_bound;
    std::optional<SeedOrderInfo> seed_order;
};

GraphDocument parse_graph(const std::string& text);
std::string serialize_graph(const GraphDocument& doc);

CertificateDocument parse_certificate(const std::string& text);
std::string serialize_certificate(const CertificateDocument& doc);

// Canonical JSON for a report alone (used for replay comparison).
std::string serialize_conditions(const ConditionReport& rep);
std::string serialize_criticality(const CriticalityReport& rep);
std::string serialize_lower_bound(const LowerBoundReport& rep);

std::string export_dot(const SimpleGraph& g, const IntegerWeighting* weights = nullptr);
std::string export_dot(const Multigraph& m);

// Schematic drawing: host faces, walks as face sequences plus crossed edges,
// the spoke-cross list and the total. Replayable via parse_drawing.
std::string export_drawing(const CoreContext& ctx, const CombinatorialDrawing& d, const IntegerWeighting& omega);

struct ParsedDrawing {
    CombinatorialDrawing drawing;
    Int total;
};

ParsedDrawing parse_drawing(const std::string& text);

// Deterministic pseudo-random permutation of 0..n-1 for --seed-order.
std::vector<int> seed_order_permutation(int n, unsigned long long seed);

}  // namespace ccrit
