#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccrit/certify.hpp"
#include "ccrit/io.hpp"

namespace {

constexpr const char* kToolName = "ccrit";
constexpr const char* kToolVersion = "0.1.0";

// 0 ok, 2 hypothesis rejection, 3 certification failure, 4 parse/schema
// error, 1 anything else.
constexpr int kExitOk = 0;
constexpr int kExitRejected = 2;
constexpr int kExitCertFailed = 3;
constexpr int kExitParse = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

nlohmann::json hypothesis_report_json(const ccrit::HypothesisReport& r) {
    nlohmann::json j;
    j["accepted"] = r.accepted();
    j["is_simple"] = r.is_simple;
    j["g_minus_uv_cubic"] = r.g_minus_uv_cubic;
    j["g_minus_uv_3connected"] = r.g_minus_uv_3connected;
    j["g_minus_uv_planar"] = r.g_minus_uv_planar;
    j["g_nonplanar"] = r.g_nonplanar;
    j["guv_internally_3connected"] = r.guv_internally_3connected;
    j["neighbor_distinctness"] = r.neighbor_distinctness;
    j["u_neighbors"] = r.u_neighbors;
    j["v_neighbors"] = r.v_neighbors;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures) fails.push_back({{"kind", f.kind}, {"detail", f.detail}});
    j["failures"] = fails;
    if (r.separation_witness) {
        const auto& w = *r.separation_witness;
        nlohmann::json sw;
        sw["pair"] = nlohmann::json::array({w.a, w.b});
        sw["side1_vertices"] = w.side1_vertices;
        sw["side2_vertices"] = w.side2_vertices;
        auto edges_json = [](const std::vector<ccrit::VertexPair>& es) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& e : es) out.push_back(nlohmann::json::array({e.a, e.b}));
            return out;
        };
        sw["side1_edges"] = edges_json(w.side1_edges);
        sw["side2_edges"] = edges_json(w.side2_edges);
        j["separation_witness"] = sw;
    }
    return j;
}

ccrit::VertexPair require_uv(const ccrit::GraphDocument& doc) {
    if (!doc.uv) throw ccrit::SchemaError("uv", "this command needs the designated edge");
    return *doc.uv;
}

int cmd_validate(const std::string& input, const std::string& output) {
    ccrit::GraphDocument doc = ccrit::parse_graph(read_input(input));
    ccrit::HypothesisReport rep = ccrit::validate_hypotheses(doc.graph, require_uv(doc));
    write_output(output, hypothesis_report_json(rep).dump(2) + "\n");
    return rep.accepted() ? kExitOk : kExitRejected;
}

int cmd_synthesize(const std::string& input, const std::string& output, std::optional<unsigned long long> seed_order,
                   int max_perturb_rounds) {
    ccrit::GraphDocument doc = ccrit::parse_graph(read_input(input));
    ccrit::VertexPair uv = require_uv(doc);
    ccrit::SimpleGraph g = doc.graph;

    ccrit::CertificateDocument out;
    if (seed_order) {
        std::vector<int> perm = ccrit::seed_order_permutation(g.vertex_count(), *seed_order);
        g = ccrit::relabel(g, perm);
        uv = ccrit::VertexPair(perm[uv.a], perm[uv.b]);
        out.seed_order = ccrit::SeedOrderInfo{*seed_order, perm};
    }

    ccrit::HypothesisReport rep = ccrit::validate_hypotheses(g, uv);
    if (!rep.accepted()) {
        write_output(output, hypothesis_report_json(rep).dump(2) + "\n");
        return kExitRejected;
    }

    out.tool_name = kToolName;
    out.tool_version = kToolVersion;
    out.certificate = ccrit::synthesize(g, uv, max_perturb_rounds);
    out.conditions = ccrit::check_conditions(out.certificate);
    out.criticality = ccrit::certify_critical(out.certificate);
    out.lower_bound = ccrit::lower_bound_certificate(out.certificate);
    write_output(output, ccrit::serialize_certificate(out));
    return kExitOk;
}

int cmd_certify(const std::string& input, const std::string& output) {
    ccrit::CertificateDocument doc = ccrit::parse_certificate(read_input(input));

    ccrit::ConditionReport conditions = ccrit::check_conditions(doc.certificate);
    ccrit::CriticalityReport criticality = ccrit::certify_critical(doc.certificate);
    ccrit::LowerBoundReport lower = ccrit::lower_bound_certificate(doc.certificate);

    bool replay_ok = ccrit::serialize_conditions(conditions) == ccrit::serialize_conditions(doc.conditions) &&
                     ccrit::serialize_criticality(criticality) == ccrit::serialize_criticality(doc.criticality) &&
                     ccrit::serialize_lower_bound(lower) == ccrit::serialize_lower_bound(doc.lower_bound);

    nlohmann::json j;
    j["replay_matches_document"] = replay_ok;
    j["conditions_pass"] = conditions.pass;
    j["criticality_all_strict"] = criticality.all_strict;
    j["lower_bound_pass"] = lower.pass;
    j["cr_value"] = ccrit::to_decimal(criticality.cr_value);
    write_output(output, j.dump(2) + "\n");
    return (replay_ok && conditions.pass && criticality.all_strict && lower.pass) ? kExitOk : kExitCertFailed;
}

int cmd_export(const std::string& input, const std::string& output, const std::string& format) {
    std::string text = read_input(input);
    if (format == "drawing") {
        ccrit::CertificateDocument doc = ccrit::parse_certificate(text);
        ccrit::CoreContext ctx = ccrit::context_of_certificate(doc.certificate);
        ccrit::CombinatorialDrawing d = ccrit::upper_bound_drawing(ctx, doc.certificate);
        write_output(output, ccrit::export_drawing(ctx, d, doc.certificate.omega));
        return kExitOk;
    }
    ccrit::GraphDocument doc = ccrit::parse_graph(text);
    if (format == "native") {
        write_output(output, ccrit::serialize_graph(doc));
        return kExitOk;
    }
    if (format == "dot") {
        if (doc.multiplicities)
            write_output(output, ccrit::export_dot(doc.as_multigraph()));
        else
            write_output(output, ccrit::export_dot(doc.graph, doc.weights ? &*doc.weights : nullptr));
        return kExitOk;
    }
    throw ccrit::SchemaError("format", "unknown export format: " + format);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Synthesizer and certifier for crossing-critical weightings of near-planar graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    std::string format = "native";
    std::optional<unsigned long long> seed_order;
    int max_perturb_rounds = 32;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "input file, '-' for stdin");
        cmd->add_option("--output", output, "output file, '-' for stdout");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the construction hypotheses of a graph document");
    add_io(validate);

    CLI::App* synthesize = app.add_subcommand("synthesize", "build a crossing-critical weighting plus certificates");
    add_io(synthesize);
    synthesize->add_option("--seed-order", seed_order, "relabel vertices with this seed before synthesizing");
    synthesize->add_option("--max-perturb-rounds", max_perturb_rounds, "perturbation round budget (default 32)");

    CLI::App* certify = app.add_subcommand("certify", "independently recheck a certificate document");
    add_io(certify);

    CLI::App* exp = app.add_subcommand("export", "export a document (dot|native|drawing)");
    add_io(exp);
    exp->add_option("--format", format, "dot, native, or drawing");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(input, output);
        if (synthesize->parsed()) return cmd_synthesize(input, output, seed_order, max_perturb_rounds);
        if (certify->parsed()) return cmd_certify(input, output);
        if (exp->parsed()) return cmd_export(input, output, format);
    } catch (const ccrit::Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case ccrit::ErrorCode::ParseError:
            case ccrit::ErrorCode::SchemaError:
                return kExitParse;
            case ccrit::ErrorCode::CertificationFailed:
            case ccrit::ErrorCode::FinalCheckFailed:
            case ccrit::ErrorCode::BalancednessViolated:
            case ccrit::ErrorCode::ClaimProofMismatch:
            case ccrit::ErrorCode::MalformedDrawing:
                return kExitCertFailed;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 1;
}
