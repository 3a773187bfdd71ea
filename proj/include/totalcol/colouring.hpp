#pragma once

#include <cstdint>
#include <vector>

#include "totalcol/graph.hpp"

namespace totalcol {

using Colour = std::int32_t;
inline constexpr Colour kUncoloured = -1;

/// Colours on every vertex and edge of one graph. Edge colours are indexed
/// by EdgeId of that graph, so a colouring is only meaningful next to the
/// graph it was built for. Colours are non-negative; palettes need not be
/// contiguous.
class TotalColouring {
public:
    TotalColouring() = default;
    /// All elements of g uncoloured.
    explicit TotalColouring(const Graph& g);
    TotalColouring(std::vector<Colour> vertex_colours, std::vector<Colour> edge_colours);

    Colour vertex_colour(VertexId v) const { return vertex_colours_.at(static_cast<std::size_t>(v)); }
    Colour edge_colour(EdgeId e) const { return edge_colours_.at(static_cast<std::size_t>(e)); }
    /// Colour of a vertex or edge element of g. Throws DomainError if absent.
    Colour colour_of(const Graph& g, const Element& el) const;

    void set_vertex(VertexId v, Colour c) { vertex_colours_.at(static_cast<std::size_t>(v)) = c; }
    void set_edge(EdgeId e, Colour c) { edge_colours_.at(static_cast<std::size_t>(e)) = c; }
    /// Sets the colour of edge {a,b} of g. Throws DomainError if g lacks it.
    void set_edge(const Graph& g, VertexId a, VertexId b, Colour c);

    const std::vector<Colour>& vertex_colours() const noexcept { return vertex_colours_; }
    const std::vector<Colour>& edge_colours() const noexcept { return edge_colours_; }

    /// True iff sized for g and no element is uncoloured.
    bool is_complete_for(const Graph& g) const noexcept;
    /// Number of distinct colours assigned (uncoloured slots ignored).
    int palette_size() const;
    /// Sorted distinct colours.
    std::vector<Colour> palette() const;

    bool operator==(const TotalColouring&) const = default;

private:
    std::vector<Colour> vertex_colours_;
    std::vector<Colour> edge_colours_;
};

/// Colours on the edges of one graph, indexed by EdgeId.
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(const Graph& g) : colours_(static_cast<std::size_t>(g.edge_count()), kUncoloured) {}
    explicit EdgeColouring(std::vector<Colour> colours) : colours_(std::move(colours)) {}

    Colour colour(EdgeId e) const { return colours_.at(static_cast<std::size_t>(e)); }
    void set(EdgeId e, Colour c) { colours_.at(static_cast<std::size_t>(e)) = c; }
    std::size_t size() const noexcept { return colours_.size(); }
    const std::vector<Colour>& colours() const noexcept { return colours_; }

    int palette_size() const;
    std::vector<Colour> palette() const;

    bool operator==(const EdgeColouring&) const = default;

private:
    std::vector<Colour> colours_;
};

struct Violation {
    Element first;
    Element second;
    Colour colour;
};

struct VerificationReport {
    bool valid = true;
    std::vector<Violation> violations;
    int colours_used = 0;
};

/// Lists every pair of conflicting elements (adjacent vertices, edges sharing
/// an endpoint, edge and endpoint) that share a colour.
/// Throws IncompleteColouringError if any element of g is uncoloured or the
/// colouring is sized for a different graph.
VerificationReport verify_total(const Graph& g, const TotalColouring& tc);

/// Proper edge colouring check. Throws IncompleteColouringError on a
/// missing edge.
VerificationReport verify_edge(const Graph& g, const EdgeColouring& ec);

enum class TypeClass { TypeI, TypeII };

const char* to_string(TypeClass t) noexcept;

/// Type I iff chi_total = Δ+1, type II iff Δ+2. For an edgeless graph with
/// vertices the only admissible value is 1. Anything else throws
/// OutOfConjectureRangeError.
TypeClass classify(const Graph& g, int chi_total);

/// Renumbers colours onto 0..k-1 preserving their relative order.
TotalColouring normalize_palette(const TotalColouring& tc);
EdgeColouring normalize_palette(const EdgeColouring& ec);

}  // namespace totalcol
