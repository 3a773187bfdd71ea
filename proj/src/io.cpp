#include "totalcol/io.hpp"

#include <array>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace totalcol {

namespace {

constexpr std::array<const char*, 12> kDotPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#8da0cb", "#e5c494",
};

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
    const auto value = j.get<std::int64_t>();
    if (value < INT32_MIN || value > INT32_MAX) throw FormatError(std::string(what) + " out of range");
    return static_cast<int>(value);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string dot_attrs(const char* colour_key, Colour c, const std::string& base_label) {
    const auto table = static_cast<Colour>(kDotPalette.size());
    std::string attrs = std::string(colour_key) + "=\"" + kDotPalette[c % table] + "\"";
    std::string label = base_label;
    if (c >= table) label += (label.empty() ? "" : "\\n") + std::string("c") + std::to_string(c);
    if (!label.empty()) attrs += ", label=" + dot_quote(label);
    return attrs;
}

}  // namespace

Json graph_to_json(const Graph& g) {
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    Json j = {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const Json& j) {
    const int n = as_int(field(j, "n"), "n");
    if (n < 0) throw FormatError("n must be non-negative");
    const Json& raw_edges = field(j, "edges");
    if (!raw_edges.is_array()) throw FormatError("edges must be an array");
    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const Json& e : raw_edges) {
        if (!e.is_array() || e.size() != 2) throw FormatError("each edge must be a pair [u, v]");
        edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const Json& raw = j.at("labels");
        if (!raw.is_array()) throw FormatError("labels must be an array of strings");
        for (const Json& l : raw) {
            if (!l.is_string()) throw FormatError("labels must be an array of strings");
            labels.push_back(l.get<std::string>());
        }
    }
    try {
        return make_graph(n, edges, std::move(labels));
    } catch (const ConstructionError& e) {
        throw FormatError(e.what());
    }
}

Json colouring_to_json(const Graph& g, const TotalColouring& tc) {
    Json edges = Json::array();
    for (EdgeId id = 0; id < g.edge_count() && id < static_cast<EdgeId>(tc.edge_colours().size()); ++id) {
        if (tc.edge_colour(id) == kUncoloured) continue;
        const Edge& e = g.edge(id);
        edges.push_back({e.u, e.v, tc.edge_colour(id)});
    }
    return {{"vertex_colours", tc.vertex_colours()}, {"edge_colours", std::move(edges)}};
}

TotalColouring colouring_from_json(const Graph& g, const Json& j) {
    const Json& raw_vertices = field(j, "vertex_colours");
    const Json& raw_edges = field(j, "edge_colours");
    if (!raw_vertices.is_array() || !raw_edges.is_array()) {
        throw FormatError("vertex_colours and edge_colours must be arrays");
    }
    if (static_cast<int>(raw_vertices.size()) != g.vertex_count()) {
        throw FormatError("colouring has " + std::to_string(raw_vertices.size()) + " vertex colours, graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
    }
    TotalColouring tc(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const int c = as_int(raw_vertices[v], "vertex colour");
        if (c < 0) throw FormatError("colours must be non-negative");
        tc.set_vertex(v, c);
    }
    for (const Json& e : raw_edges) {
        if (!e.is_array() || e.size() != 3) throw FormatError("each edge colour must be [u, v, c]");
        const int u = as_int(e[0], "edge endpoint");
        const int v = as_int(e[1], "edge endpoint");
        const int c = as_int(e[2], "edge colour");
        if (c < 0) throw FormatError("colours must be non-negative");
        const auto id = g.edge_id(u, v);
        if (!id) throw FormatError("coloured edge [" + std::to_string(u) + "," + std::to_string(v) + "] is not in the graph");
        if (tc.edge_colour(*id) != kUncoloured) {
            throw FormatError("edge [" + std::to_string(u) + "," + std::to_string(v) + "] coloured twice");
        }
        tc.set_edge(*id, c);
    }
    return tc;
}

Json report_to_json(const VerificationReport& report, std::size_t max_violations) {
    Json violations = Json::array();
    for (std::size_t i = 0; i < report.violations.size() && i < max_violations; ++i) {
        const Violation& v = report.violations[i];
        violations.push_back({{"first", v.first.to_string()}, {"second", v.second.to_string()}, {"colour", v.colour}});
    }
    return {{"valid", report.valid},
            {"colours_used", report.colours_used},
            {"violation_count", report.violations.size()},
            {"violations", std::move(violations)}};
}

Json latin_square_to_json(const LatinSquare& square) {
    return {{"rows", square.rows()}, {"transversal", square.transversal()}};
}

Json oracle_result_to_json(const Graph& g, const OracleResult& result) {
    Json j = {{"graph", graph_to_json(g)},
              {"lower", result.lower},
              {"nodes", result.nodes},
              {"status", to_string(result.status)}};
    j["chi_total"] = result.chi_total() ? Json(*result.chi_total()) : Json(nullptr);
    j["upper"] = result.upper ? Json(*result.upper) : Json(nullptr);
    return j;
}

Json bundle_to_json(const Bundle& bundle) {
    Json j = {{"graph", graph_to_json(bundle.graph)},
              {"colouring", colouring_to_json(bundle.graph, bundle.colouring)},
              {"construction", bundle.construction}};
    try {
        j["report"] = report_to_json(verify_total(bundle.graph, bundle.colouring));
    } catch (const IncompleteColouringError& e) {
        j["report"] = {{"valid", false}, {"error", e.what()}};
    }
    return j;
}

Bundle bundle_from_json(const Json& j) {
    Bundle b;
    b.graph = graph_from_json(field(j, "graph"));
    b.colouring = colouring_from_json(b.graph, field(j, "colouring"));
    if (j.contains("construction")) b.construction = j.at("construction");
    return b;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

std::string to_dot(const Graph& g, const TotalColouring& tc) {
    if (!tc.is_complete_for(g)) throw IncompleteColouringError("cannot render an incomplete colouring");
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [style=filled, " << dot_attrs("fillcolor", tc.vertex_colour(v), g.label(v)) << "];\n";
    }
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        out << "  " << e.u << " -- " << e.v << " [penwidth=2, " << dot_attrs("color", tc.edge_colour(id), "") << "];\n";
    }
    out << "}\n";
    return out.str();
}

int dot_palette_size() noexcept { return static_cast<int>(kDotPalette.size()); }

}  // namespace totalcol
