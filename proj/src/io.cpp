#include "ccrit/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ccrit {

using nlohmann::json;

namespace {

std::pair<int, int> line_column(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, col, e.what());
    }
}

std::string edge_key(const VertexPair& e) { return std::to_string(e.a) + "-" + std::to_string(e.b); }

VertexPair parse_edge_key(const std::string& key, const std::string& field) {
    size_t dash = key.find('-');
    if (dash == std::string::npos) throw SchemaError(field, "edge key '" + key + "' is not of the form a-b");
    try {
        int a = std::stoi(key.substr(0, dash));
        int b = std::stoi(key.substr(dash + 1));
        return VertexPair(a, b);
    } catch (const std::exception&) {
        throw SchemaError(field, "edge key '" + key + "' is not of the form a-b");
    }
}

Int positive_int_from(const json& j, const std::string& field) {
    if (!j.is_string()) throw SchemaError(field, "integers are serialized as decimal strings");
    Int v;
    try {
        v = int_from_decimal(j.get<std::string>());
    } catch (const std::exception&) {
        throw SchemaError(field, "'" + j.get<std::string>() + "' is not a decimal integer");
    }
    if (v < 1) throw SchemaError(field, "value must be >= 1");
    return v;
}

// Edge-keyed map of decimal strings -> weighting indexed by edge id.
IntegerWeighting weighting_from(const json& j, const SimpleGraph& g, const std::string& field) {
    IntegerWeighting w(g.edge_count(), Int(0));
    std::vector<bool> seen(g.edge_count(), false);
    for (auto it = j.begin(); it != j.end(); ++it) {
        VertexPair e = parse_edge_key(it.key(), field);
        int id = g.edge_id(e.a, e.b);
        if (id < 0) throw SchemaError(field, "key '" + it.key() + "' is not an edge of the graph");
        w[id] = positive_int_from(it.value(), field + "." + it.key());
        seen[id] = true;
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (!seen[e]) throw SchemaError(field, "edge " + edge_key(g.edge(e)) + " has no entry");
    return w;
}

json weighting_to(const IntegerWeighting& w, const SimpleGraph& g) {
    json out = json::object();
    for (int e = 0; e < g.edge_count(); ++e) out[edge_key(g.edge(e))] = to_decimal(w[e]);
    return out;
}

json int_array(const std::vector<Int>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(to_decimal(x));
    return out;
}

std::vector<Int> int_array_from(const json& j, const std::string& field) {
    std::vector<Int> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw SchemaError(field, "integers are serialized as decimal strings");
        out.push_back(int_from_decimal(x.get<std::string>()));
    }
    return out;
}

template <size_t N>
json int_array(const std::array<Int, N>& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(to_decimal(x));
    return out;
}

json claim_to(const ClaimPoint& p) {
    json out;
    json coords = json::array();
    for (const Rat& x : p.x) coords.push_back(to_fraction(x));
    out["point"] = coords;
    out["tight_faces"] = p.tight_faces;
    return out;
}

ClaimPoint claim_from(const json& j, const std::string& field) {
    ClaimPoint p;
    const auto& coords = j.at("point");
    if (coords.size() != 3) throw SchemaError(field, "claim point needs 3 coordinates");
    for (int i = 0; i < 3; ++i) p.x[i] = rat_from_fraction(coords[i].get<std::string>());
    const auto& tf = j.at("tight_faces");
    if (tf.size() != 3) throw SchemaError(field, "claim point needs 3 tight faces");
    for (int i = 0; i < 3; ++i) p.tight_faces[i] = tf[i].get<int>();
    return p;
}

json walk_to(const DualWalk& w) {
    return json{{"start", w.start_face}, {"end", w.end_face}, {"steps", w.steps}};
}

DualWalk walk_from(const json& j) {
    DualWalk w;
    w.start_face = j.at("start").get<int>();
    w.end_face = j.at("end").get<int>();
    w.steps = j.at("steps").get<std::vector<int>>();
    return w;
}

json drawing_to(const CombinatorialDrawing& d) {
    json out;
    out["face_u"] = d.face_u;
    out["face_v"] = d.face_v;
    out["route_uv"] = walk_to(d.route_uv);
    json us = json::array(), vs = json::array();
    for (int i = 0; i < 3; ++i) {
        us.push_back(walk_to(d.u_spokes[i]));
        vs.push_back(walk_to(d.v_spokes[i]));
    }
    out["u_spokes"] = us;
    out["v_spokes"] = vs;
    json sc = json::array();
    for (auto& [i, j] : d.spoke_cross) sc.push_back(json::array({i, j}));
    out["spoke_cross"] = sc;
    return out;
}

CombinatorialDrawing drawing_from(const json& j) {
    CombinatorialDrawing d;
    d.face_u = j.at("face_u").get<int>();
    d.face_v = j.at("face_v").get<int>();
    d.route_uv = walk_from(j.at("route_uv"));
    for (int i = 0; i < 3; ++i) {
        d.u_spokes[i] = walk_from(j.at("u_spokes")[i]);
        d.v_spokes[i] = walk_from(j.at("v_spokes")[i]);
    }
    for (const auto& pr : j.at("spoke_cross")) d.spoke_cross.push_back({pr[0].get<int>(), pr[1].get<int>()});
    return d;
}

json conditions_to(const ConditionReport& r) {
    json out;
    out["balanced"] = r.balanced;
    out["unbalanced_core_edges"] = r.unbalanced_core_edges;
    out["pair_product_ok"] = r.pair_product_ok;
    out["pair_product_margin"] = to_decimal(r.pair_product_margin);
    out["min_core_edges"] = r.min_core_edges;
    out["face_ineq_u_ok"] = r.face_ineq_u_ok;
    out["face_margin_u"] = int_array(r.face_margin_u);
    out["tight_u_ok"] = r.tight_u_ok;
    out["tight_residue_u"] = int_array(r.tight_residue_u);
    out["tight_u_positive"] = r.tight_u_positive;
    out["face_ineq_v_ok"] = r.face_ineq_v_ok;
    out["face_margin_v"] = int_array(r.face_margin_v);
    out["tight_v_ok"] = r.tight_v_ok;
    out["tight_residue_v"] = int_array(r.tight_residue_v);
    out["tight_v_positive"] = r.tight_v_positive;
    out["spoke_bound_ok"] = r.spoke_bound_ok;
    json margins = json::array();
    for (const auto& row : r.spoke_margin9) margins.push_back(int_array(row));
    out["spoke_margin9"] = margins;
    out["pass"] = r.pass;
    return out;
}

ConditionReport conditions_from(const json& j) {
    ConditionReport r;
    r.balanced = j.at("balanced").get<bool>();
    r.unbalanced_core_edges = j.at("unbalanced_core_edges").get<std::vector<int>>();
    r.pair_product_ok = j.at("pair_product_ok").get<bool>();
    r.pair_product_margin = int_from_decimal(j.at("pair_product_margin").get<std::string>());
    r.min_core_edges = j.at("min_core_edges").get<std::array<int, 2>>();
    r.face_ineq_u_ok = j.at("face_ineq_u_ok").get<bool>();
    for (auto& x : int_array_from(j.at("face_margin_u"), "face_margin_u")) r.face_margin_u.push_back(x);
    r.tight_u_ok = j.at("tight_u_ok").get<bool>();
    {
        auto v = int_array_from(j.at("tight_residue_u"), "tight_residue_u");
        std::copy_n(v.begin(), 3, r.tight_residue_u.begin());
    }
    r.tight_u_positive = j.at("tight_u_positive").get<std::array<bool, 3>>();
    r.face_ineq_v_ok = j.at("face_ineq_v_ok").get<bool>();
    for (auto& x : int_array_from(j.at("face_margin_v"), "face_margin_v")) r.face_margin_v.push_back(x);
    r.tight_v_ok = j.at("tight_v_ok").get<bool>();
    {
        auto v = int_array_from(j.at("tight_residue_v"), "tight_residue_v");
        std::copy_n(v.begin(), 3, r.tight_residue_v.begin());
    }
    r.tight_v_positive = j.at("tight_v_positive").get<std::array<bool, 3>>();
    r.spoke_bound_ok = j.at("spoke_bound_ok").get<bool>();
    for (int i = 0; i < 3; ++i) {
        auto row = int_array_from(j.at("spoke_margin9")[i], "spoke_margin9");
        std::copy_n(row.begin(), 3, r.spoke_margin9[i].begin());
    }
    r.pass = j.at("pass").get<bool>();
    return r;
}

json criticality_to(const CriticalityReport& r) {
    json out;
    out["cr_value"] = to_decimal(r.cr_value);
    out["all_strict"] = r.all_strict;
    json ws = json::array();
    for (const EdgeWitness& w : r.witnesses) {
        json jw;
        jw["g_edge"] = w.g_edge;
        jw["drawing"] = drawing_to(w.drawing);
        jw["count_full"] = to_decimal(w.count_full);
        jw["count_reduced"] = to_decimal(w.count_reduced);
        jw["strict"] = w.strict;
        ws.push_back(std::move(jw));
    }
    out["witnesses"] = ws;
    return out;
}

CriticalityReport criticality_from(const json& j) {
    CriticalityReport r;
    r.cr_value = int_from_decimal(j.at("cr_value").get<std::string>());
    r.all_strict = j.at("all_strict").get<bool>();
    for (const auto& jw : j.at("witnesses")) {
        EdgeWitness w;
        w.g_edge = jw.at("g_edge").get<int>();
        w.drawing = drawing_from(jw.at("drawing"));
        w.count_full = int_from_decimal(jw.at("count_full").get<std::string>());
        w.count_reduced = int_from_decimal(jw.at("count_reduced").get<std::string>());
        w.strict = jw.at("strict").get<bool>();
        r.witnesses.push_back(std::move(w));
    }
    return r;
}

json lower_bound_to(const LowerBoundReport& r) {
    json out;
    out["induced_planarity_ok"] = r.induced_planarity_ok;
    out["pair_margin"] = to_decimal(r.pair_margin);
    out["face_ineq_ok"] = r.face_ineq_ok;
    out["triangle_ok"] = r.triangle_ok;
    out["min_pair"] = json::array({r.min_pair_f1, r.min_pair_f2});
    out["min_triangle_margin"] = to_decimal(r.min_triangle_margin);
    out["pass"] = r.pass;
    return out;
}

LowerBoundReport lower_bound_from(const json& j) {
    LowerBoundReport r;
    r.induced_planarity_ok = j.at("induced_planarity_ok").get<bool>();
    r.pair_margin = int_from_decimal(j.at("pair_margin").get<std::string>());
    r.face_ineq_ok = j.at("face_ineq_ok").get<bool>();
    r.triangle_ok = j.at("triangle_ok").get<bool>();
    r.min_pair_f1 = j.at("min_pair")[0].get<int>();
    r.min_pair_f2 = j.at("min_pair")[1].get<int>();
    r.min_triangle_margin = int_from_decimal(j.at("min_triangle_margin").get<std::string>());
    r.pass = j.at("pass").get<bool>();
    return r;
}

SimpleGraph graph_from(const json& j, const std::string& field) {
    if (!j.contains("n")) throw SchemaError(field + ".n", "missing vertex count");
    if (!j.contains("edges")) throw SchemaError(field + ".edges", "missing edge list");
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("edges")) {
        if (e.size() != 2) throw SchemaError(field + ".edges", "edges are [a,b] pairs");
        pairs.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    try {
        return build_simple_graph(n, pairs);
    } catch (const Error& err) {
        throw SchemaError(field + ".edges", err.what());
    }
}

json graph_to(const SimpleGraph& g, const std::optional<VertexPair>& uv) {
    json out;
    out["n"] = g.vertex_count();
    json edges = json::array();
    for (const VertexPair& e : g.edges()) edges.push_back(json::array({e.a, e.b}));
    out["edges"] = edges;
    if (uv) out["uv"] = json::array({uv->a, uv->b});
    return out;
}

}  // namespace

Multigraph GraphDocument::as_multigraph() const {
    std::vector<MultiEdgeClass> classes;
    for (int e = 0; e < graph.edge_count(); ++e) {
        Int mult = multiplicities ? (*multiplicities)[e] : Int(1);
        classes.push_back({graph.edge(e), mult});
    }
    return Multigraph(graph.vertex_count(), std::move(classes));
}

GraphDocument parse_graph(const std::string& text) {
    json j = parse_json(text);
    GraphDocument doc;
    if (j.contains("version")) doc.version = j.at("version").get<int>();
    doc.graph = graph_from(j, "graph");
    if (j.contains("uv")) {
        const auto& uv = j.at("uv");
        if (uv.size() != 2) throw SchemaError("uv", "uv is an [a,b] pair");
        VertexPair p(uv[0].get<int>(), uv[1].get<int>());
        if (doc.graph.edge_id(p.a, p.b) < 0) throw SchemaError("uv", "designated edge is not in the graph");
        doc.uv = p;
    }
    if (j.contains("weights")) doc.weights = weighting_from(j.at("weights"), doc.graph, "weights");
    if (j.contains("multiplicities"))
        doc.multiplicities = weighting_from(j.at("multiplicities"), doc.graph, "multiplicities");
    return doc;
}

std::string serialize_graph(const GraphDocument& doc) {
    json j = graph_to(doc.graph, doc.uv);
    j["version"] = doc.version;
    if (doc.weights) j["weights"] = weighting_to(*doc.weights, doc.graph);
    if (doc.multiplicities) j["multiplicities"] = weighting_to(*doc.multiplicities, doc.graph);
    return j.dump(2) + "\n";
}

CertificateDocument parse_certificate(const std::string& text) {
    json j = parse_json(text);
    CertificateDocument doc;
    doc.version = j.at("version").get<int>();
    doc.tool_name = j.at("tool").at("name").get<std::string>();
    doc.tool_version = j.at("tool").at("version").get<std::string>();

    SynthesisCertificate& cert = doc.certificate;
    cert.g = graph_from(j.at("graph"), "graph");
    if (!j.at("graph").contains("uv")) throw SchemaError("graph.uv", "certificate graph needs its designated edge");
    cert.uv = VertexPair(j.at("graph").at("uv")[0].get<int>(), j.at("graph").at("uv")[1].get<int>());
    if (cert.g.edge_id(cert.uv.a, cert.uv.b) < 0) throw SchemaError("graph.uv", "designated edge not in graph");

    auto triple = [&](const char* key) {
        std::array<int, 3> out{};
        const auto& arr = j.at(key);
        if (arr.size() != 3) throw SchemaError(key, "expected 3 vertex ids");
        for (int i = 0; i < 3; ++i) out[i] = arr[i].get<int>();
        return out;
    };
    cert.u_neighbors = triple("u_neighbors");
    cert.v_neighbors = triple("v_neighbors");
    cert.core_rotation = j.at("core_rotation").get<std::vector<std::vector<int>>>();

    const json& c = j.at("certificate");
    // mu is keyed by core edges; rebuild the core to resolve ids.
    {
        std::vector<int> core_of_g(cert.g.vertex_count(), -1);
        int next = 0;
        for (int x = 0; x < cert.g.vertex_count(); ++x)
            if (x != cert.uv.a && x != cert.uv.b) core_of_g[x] = next++;
        std::vector<VertexPair> core_edges;
        for (const VertexPair& e : cert.g.edges())
            if (core_of_g[e.a] >= 0 && core_of_g[e.b] >= 0) core_edges.emplace_back(core_of_g[e.a], core_of_g[e.b]);
        SimpleGraph core(next, std::move(core_edges));
        cert.mu = weighting_from(c.at("mu"), core, "certificate.mu");
    }
    for (const auto& row : c.at("dist_mu")) cert.dist_mu.push_back(int_array_from(row, "certificate.dist_mu"));
    cert.claim_u = claim_from(c.at("claim_u"), "certificate.claim_u");
    cert.claim_v = claim_from(c.at("claim_v"), "certificate.claim_v");
    cert.m = positive_int_from(c.at("M"), "certificate.M");
    {
        auto r = int_array_from(c.at("r"), "certificate.r");
        auto s = int_array_from(c.at("s"), "certificate.s");
        if (r.size() != 3 || s.size() != 3) throw SchemaError("certificate.r", "r and s are integer triples");
        std::copy_n(r.begin(), 3, cert.r.begin());
        std::copy_n(s.begin(), 3, cert.s.begin());
    }
    cert.c = positive_int_from(c.at("c"), "certificate.c");
    cert.omega = weighting_from(c.at("omega"), cert.g, "certificate.omega");

    doc.conditions = conditions_from(j.at("conditions"));
    doc.criticality = criticality_from(j.at("criticality"));
    doc.lower_bound = lower_bound_from(j.at("lower_bound"));
    if (j.contains("seed_order")) {
        SeedOrderInfo info;
        info.seed = j.at("seed_order").at("seed").get<unsigned long long>();
        info.permutation = j.at("seed_order").at("permutation").get<std::vector<int>>();
        doc.seed_order = info;
    }
    return doc;
}

std::string serialize_certificate(const CertificateDocument& doc) {
    const SynthesisCertificate& cert = doc.certificate;
    json j;
    j["version"] = doc.version;
    j["tool"] = json{{"name", doc.tool_name}, {"version", doc.tool_version}};
    j["graph"] = graph_to(cert.g, cert.uv);
    j["u_neighbors"] = cert.u_neighbors;
    j["v_neighbors"] = cert.v_neighbors;
    j["core_rotation"] = cert.core_rotation;

    json c;
    {
        std::vector<int> core_of_g(cert.g.vertex_count(), -1);
        int next = 0;
        for (int x = 0; x < cert.g.vertex_count(); ++x)
            if (x != cert.uv.a && x != cert.uv.b) core_of_g[x] = next++;
        std::vector<VertexPair> core_edges;
        for (const VertexPair& e : cert.g.edges())
            if (core_of_g[e.a] >= 0 && core_of_g[e.b] >= 0) core_edges.emplace_back(core_of_g[e.a], core_of_g[e.b]);
        SimpleGraph core(next, std::move(core_edges));
        c["mu"] = weighting_to(cert.mu, core);
    }
    json dist = json::array();
    for (const auto& row : cert.dist_mu) dist.push_back(int_array(row));
    c["dist_mu"] = dist;
    c["claim_u"] = claim_to(cert.claim_u);
    c["claim_v"] = claim_to(cert.claim_v);
    c["M"] = to_decimal(cert.m);
    c["r"] = int_array(cert.r);
    c["s"] = int_array(cert.s);
    c["c"] = to_decimal(cert.c);
    c["omega"] = weighting_to(cert.omega, cert.g);
    j["certificate"] = c;

    j["conditions"] = conditions_to(doc.conditions);
    j["criticality"] = criticality_to(doc.criticality);
    j["lower_bound"] = lower_bound_to(doc.lower_bound);
    if (doc.seed_order) {
        j["seed_order"] =
            json{{"seed", doc.seed_order->seed}, {"permutation", doc.seed_order->permutation}};
    }
    return j.dump(2) + "\n";
}

std::string serialize_conditions(const ConditionReport& rep) { return conditions_to(rep).dump(2) + "\n"; }
std::string serialize_criticality(const CriticalityReport& rep) { return criticality_to(rep).dump(2) + "\n"; }
std::string serialize_lower_bound(const LowerBoundReport& rep) { return lower_bound_to(rep).dump(2) + "\n"; }

std::string export_dot(const SimpleGraph& g, const IntegerWeighting* weights) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "  " << g.edge(e).a << " -- " << g.edge(e).b;
        if (weights) out << " [label=\"" << to_decimal((*weights)[e]) << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_dot(const Multigraph& m) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < m.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const MultiEdgeClass& c : m.classes())
        for (Int i = 0; i < c.multiplicity; ++i) out << "  " << c.ends.a << " -- " << c.ends.b << ";\n";
    out << "}\n";
    return out.str();
}

namespace {

void print_walk(std::ostringstream& out, const CoreContext& ctx, const std::string& name, const DualWalk& w) {
    out << "walk " << name << " : faces " << w.start_face;
    int cur = w.start_face;
    for (int e : w.steps) {
        const VertexPair& de = ctx.dual.graph.edges[e];
        cur = de.a == cur ? de.b : de.a;
        out << " " << cur;
    }
    out << " ; edges";
    for (int e : w.steps) out << " " << e;
    out << "\n";
}

}  // namespace

std::string export_drawing(const CoreContext& ctx, const CombinatorialDrawing& d, const IntegerWeighting& omega) {
    std::ostringstream out;
    out << "drawing\n";
    out << "host_u " << d.face_u << "\n";
    out << "host_v " << d.face_v << "\n";
    print_walk(out, ctx, "uv", d.route_uv);
    for (int i = 0; i < 3; ++i) print_walk(out, ctx, "uu" + std::to_string(i + 1), d.u_spokes[i]);
    for (int i = 0; i < 3; ++i) print_walk(out, ctx, "vv" + std::to_string(i + 1), d.v_spokes[i]);
    out << "cross";
    for (auto& [i, j] : d.spoke_cross) out << " " << i + 1 << "x" << j + 1;
    out << "\n";
    out << "total " << to_decimal(count_crossings(ctx, d, omega)) << "\n";
    return out.str();
}

ParsedDrawing parse_drawing(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> std::string {
        if (!std::getline(in, line)) throw ParseError(lineno + 1, 1, "unexpected end of drawing");
        ++lineno;
        return line;
    };
    if (next_line() != "drawing") throw ParseError(lineno, 1, "expected 'drawing' header");

    ParsedDrawing out;
    auto parse_host = [&](const std::string& tag) {
        std::istringstream ls(next_line());
        std::string word;
        int value;
        if (!(ls >> word >> value) || word != tag) throw ParseError(lineno, 1, "expected '" + tag + " <face>'");
        return value;
    };
    out.drawing.face_u = parse_host("host_u");
    out.drawing.face_v = parse_host("host_v");

    auto parse_walk = [&](const std::string& tag) {
        std::istringstream ls(next_line());
        std::string word, name, sep;
        if (!(ls >> word >> name >> sep) || word != "walk" || name != tag || sep != ":")
            throw ParseError(lineno, 1, "expected 'walk " + tag + " : ...'");
        std::string faces_kw;
        ls >> faces_kw;
        if (faces_kw != "faces") throw ParseError(lineno, 1, "expected face list");
        std::vector<int> faces;
        std::string tok;
        while (ls >> tok && tok != ";") faces.push_back(std::stoi(tok));
        std::string edges_kw;
        ls >> edges_kw;
        if (edges_kw != "edges") throw ParseError(lineno, 1, "expected edge list");
        DualWalk w;
        int e;
        while (ls >> e) w.steps.push_back(e);
        if (faces.empty() || faces.size() != w.steps.size() + 1)
            throw ParseError(lineno, 1, "face sequence does not match edge count");
        w.start_face = faces.front();
        w.end_face = faces.back();
        return w;
    };
    out.drawing.route_uv = parse_walk("uv");
    for (int i = 0; i < 3; ++i) out.drawing.u_spokes[i] = parse_walk("uu" + std::to_string(i + 1));
    for (int i = 0; i < 3; ++i) out.drawing.v_spokes[i] = parse_walk("vv" + std::to_string(i + 1));

    {
        std::istringstream ls(next_line());
        std::string word;
        if (!(ls >> word) || word != "cross") throw ParseError(lineno, 1, "expected 'cross ...'");
        std::string pair;
        while (ls >> pair) {
            size_t x = pair.find('x');
            if (x == std::string::npos) throw ParseError(lineno, 1, "cross pairs look like 1x2");
            out.drawing.spoke_cross.push_back({std::stoi(pair.substr(0, x)) - 1, std::stoi(pair.substr(x + 1)) - 1});
        }
    }
    {
        std::istringstream ls(next_line());
        std::string word, value;
        if (!(ls >> word >> value) || word != "total") throw ParseError(lineno, 1, "expected 'total <count>'");
        out.total = int_from_decimal(value);
    }
    return out;
}

std::vector<int> seed_order_permutation(int n, unsigned long long seed) {
    // Explicit Fisher-Yates on a 64-bit SplitMix stream keeps the permutation
    // reproducible across standard libraries.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    unsigned long long state = seed;
    auto next = [&state]() {
        state += 0x9e3779b97f4a7c15ull;
        unsigned long long z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    };
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(next() % static_cast<unsigned long long>(i + 1));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

}  // namespace ccrit
