#include "totalcol/colouring.hpp"

#include <algorithm>
#include <string>

#include "totalcol/errors.hpp"

namespace totalcol {

namespace {

std::vector<Colour> distinct_colours(const std::vector<Colour>& a, const std::vector<Colour>& b) {
    std::vector<Colour> all;
    all.reserve(a.size() + b.size());
    for (Colour c : a)
        if (c != kUncoloured) all.push_back(c);
    for (Colour c : b)
        if (c != kUncoloured) all.push_back(c);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

std::vector<Colour> remap(const std::vector<Colour>& colours, const std::vector<Colour>& palette) {
    std::vector<Colour> out;
    out.reserve(colours.size());
    for (Colour c : colours) {
        if (c == kUncoloured) {
            out.push_back(c);
            continue;
        }
        auto it = std::lower_bound(palette.begin(), palette.end(), c);
        out.push_back(static_cast<Colour>(it - palette.begin()));
    }
    return out;
}

// Appends a violation for every pair of edges at v that share a colour.
template <typename ColourOf>
void collect_edge_clashes(const Graph& g, VertexId v, ColourOf colour_of, std::vector<Violation>& out) {
    const auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
            const Colour c = colour_of(inc[i]);
            if (c == colour_of(inc[j])) {
                out.push_back({Element::edge(g.edge(inc[i])), Element::edge(g.edge(inc[j])), c});
            }
        }
    }
}

}  // namespace

TotalColouring::TotalColouring(const Graph& g)
    : vertex_colours_(static_cast<std::size_t>(g.vertex_count()), kUncoloured),
      edge_colours_(static_cast<std::size_t>(g.edge_count()), kUncoloured) {}

TotalColouring::TotalColouring(std::vector<Colour> vertex_colours, std::vector<Colour> edge_colours)
    : vertex_colours_(std::move(vertex_colours)), edge_colours_(std::move(edge_colours)) {}

Colour TotalColouring::colour_of(const Graph& g, const Element& el) const {
    if (el.is_vertex()) {
        if (!g.contains_vertex(el.as_vertex())) throw DomainError("element " + el.to_string() + " not in graph");
        return vertex_colour(el.as_vertex());
    }
    auto id = g.edge_id(el.as_edge().u, el.as_edge().v);
    if (!id) throw DomainError("element " + el.to_string() + " not in graph");
    return edge_colour(*id);
}

void TotalColouring::set_edge(const Graph& g, VertexId a, VertexId b, Colour c) {
    auto id = g.edge_id(a, b);
    if (!id) throw DomainError("edge {" + std::to_string(a) + "," + std::to_string(b) + "} not in graph");
    set_edge(*id, c);
}

bool TotalColouring::is_complete_for(const Graph& g) const noexcept {
    if (static_cast<int>(vertex_colours_.size()) != g.vertex_count()) return false;
    if (static_cast<int>(edge_colours_.size()) != g.edge_count()) return false;
    auto uncoloured = [](Colour c) { return c < 0; };
    return std::none_of(vertex_colours_.begin(), vertex_colours_.end(), uncoloured) &&
           std::none_of(edge_colours_.begin(), edge_colours_.end(), uncoloured);
}

int TotalColouring::palette_size() const { return static_cast<int>(palette().size()); }

std::vector<Colour> TotalColouring::palette() const { return distinct_colours(vertex_colours_, edge_colours_); }

int EdgeColouring::palette_size() const { return static_cast<int>(palette().size()); }

std::vector<Colour> EdgeColouring::palette() const { return distinct_colours(colours_, {}); }

VerificationReport verify_total(const Graph& g, const TotalColouring& tc) {
    if (!tc.is_complete_for(g)) {
        throw IncompleteColouringError("total colouring does not colour every element of the graph (" +
                                       std::to_string(tc.vertex_colours().size()) + "/" +
                                       std::to_string(g.vertex_count()) + " vertex slots, " +
                                       std::to_string(tc.edge_colours().size()) + "/" +
                                       std::to_string(g.edge_count()) + " edge slots)");
    }
    VerificationReport report;
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        const Colour ce = tc.edge_colour(id);
        if (tc.vertex_colour(e.u) == tc.vertex_colour(e.v)) {
            report.violations.push_back({Element::vertex(e.u), Element::vertex(e.v), tc.vertex_colour(e.u)});
        }
        if (ce == tc.vertex_colour(e.u)) report.violations.push_back({Element::edge(e), Element::vertex(e.u), ce});
        if (ce == tc.vertex_colour(e.v)) report.violations.push_back({Element::edge(e), Element::vertex(e.v), ce});
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        collect_edge_clashes(g, v, [&](EdgeId e) { return tc.edge_colour(e); }, report.violations);
    }
    report.valid = report.violations.empty();
    report.colours_used = tc.palette_size();
    return report;
}

VerificationReport verify_edge(const Graph& g, const EdgeColouring& ec) {
    if (static_cast<int>(ec.size()) != g.edge_count() ||
        std::any_of(ec.colours().begin(), ec.colours().end(), [](Colour c) { return c < 0; })) {
        throw IncompleteColouringError("edge colouring does not colour every edge of the graph");
    }
    VerificationReport report;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        collect_edge_clashes(g, v, [&](EdgeId e) { return ec.colour(e); }, report.violations);
    }
    report.valid = report.violations.empty();
    report.colours_used = ec.palette_size();
    return report;
}

const char* to_string(TypeClass t) noexcept { return t == TypeClass::TypeI ? "type I" : "type II"; }

TypeClass classify(const Graph& g, int chi_total) {
    const int delta = g.max_degree();
    if (delta == 0) {
        if (chi_total == 1) return TypeClass::TypeI;
        throw OutOfConjectureRangeError("edgeless graph has total chromatic number 1, got " +
                                        std::to_string(chi_total));
    }
    if (chi_total == delta + 1) return TypeClass::TypeI;
    if (chi_total == delta + 2) return TypeClass::TypeII;
    throw OutOfConjectureRangeError("total chromatic number " + std::to_string(chi_total) + " outside [" +
                                    std::to_string(delta + 1) + ", " + std::to_string(delta + 2) + "]");
}

TotalColouring normalize_palette(const TotalColouring& tc) {
    const auto palette = tc.palette();
    return TotalColouring(remap(tc.vertex_colours(), palette), remap(tc.edge_colours(), palette));
}

EdgeColouring normalize_palette(const EdgeColouring& ec) { return EdgeColouring(remap(ec.colours(), ec.palette())); }

}  // namespace totalcol
