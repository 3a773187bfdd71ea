#pragma once

#include <string>

#include "json.hpp"

#include "totalcol/colouring.hpp"
#include "totalcol/edge_colouring.hpp"
#include "totalcol/errors.hpp"
#include "totalcol/graph.hpp"
#include "totalcol/oracle.hpp"

namespace totalcol {

/// Input that does not match a documented JSON schema.
class FormatError : public Error {
public:
    using Error::Error;
};

using Json = nlohmann::json;

// Graph: {"n": int, "edges": [[u,v],...], "labels": [str,...]}; labels
// only present for labelled graphs.
Json graph_to_json(const Graph& g);
/// Throws FormatError on schema violations, including bad endpoints.
Graph graph_from_json(const Json& j);

// Colouring: {"vertex_colours": [int,...], "edge_colours": [[u,v,c],...]}.
Json colouring_to_json(const Graph& g, const TotalColouring& tc);
/// Edges not listed stay uncoloured (verify_total reports them as
/// incomplete). Throws FormatError for edges g lacks, negative colours,
/// duplicate edge entries or a vertex list of the wrong length.
TotalColouring colouring_from_json(const Graph& g, const Json& j);

/// At most `max_violations` conflicts are listed; "violation_count" always
/// holds the full number.
Json report_to_json(const VerificationReport& report, std::size_t max_violations = 20);

Json latin_square_to_json(const LatinSquare& square);

/// {"graph", "chi_total", "lower", "upper", "nodes", "status"}.
Json oracle_result_to_json(const Graph& g, const OracleResult& result);

/// Self-contained certificate: graph, colouring and verification report.
struct Bundle {
    Graph graph;
    TotalColouring colouring;
    Json construction = Json::object();
};

Json bundle_to_json(const Bundle& bundle);
/// Reads graph and colouring back; the stored report is ignored.
Bundle bundle_from_json(const Json& j);

/// Parses a file as JSON. Throws FormatError if unreadable or malformed.
Json read_json_file(const std::string& path);

/// Graphviz rendering: vertices filled and edges stroked from a fixed
/// palette table; colours past the table wrap and carry a "c<k>" label.
std::string to_dot(const Graph& g, const TotalColouring& tc);

/// Number of entries in the DOT palette table.
int dot_palette_size() noexcept;

}  // namespace totalcol
