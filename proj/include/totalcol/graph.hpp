#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace totalcol {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    auto operator<=>(const Edge&) const = default;
};

/// Canonicalizes {a, b}. Does not reject a == b; Graph construction does.
constexpr Edge make_edge(VertexId a, VertexId b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// A vertex or an edge: the unit a total colouring assigns colours to.
class Element {
public:
    enum class Kind : std::uint8_t { Vertex, Edge };

    static Element vertex(VertexId v) noexcept { return Element(Kind::Vertex, Edge{v, v}); }
    static Element edge(VertexId a, VertexId b) noexcept { return Element(Kind::Edge, make_edge(a, b)); }
    static Element edge(Edge e) noexcept { return edge(e.u, e.v); }

    Kind kind() const noexcept { return kind_; }
    bool is_vertex() const noexcept { return kind_ == Kind::Vertex; }
    bool is_edge() const noexcept { return kind_ == Kind::Edge; }

    VertexId as_vertex() const noexcept { return pair_.u; }
    Edge as_edge() const noexcept { return pair_; }

    std::string to_string() const;

    auto operator<=>(const Element&) const = default;

private:
    Element(Kind kind, Edge pair) noexcept : kind_(kind), pair_(pair) {}

    Kind kind_;
    Edge pair_;
};

struct DegreeProfile {
    std::vector<int> degrees;
    int max_degree = 0;
};

/// Finite simple undirected graph over dense vertex ids 0..n-1.
///
/// Edges are kept sorted and deduplicated; an EdgeId is the position of the
/// edge in edges(). Labels are display metadata and never identify vertices.
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    int vertex_count() const noexcept { return vertex_count_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    int element_count() const noexcept { return vertex_count() + edge_count(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

    std::span<const VertexId> neighbours(VertexId v) const;
    std::span<const EdgeId> incident_edges(VertexId v) const;

    int degree(VertexId v) const { return static_cast<int>(neighbours(v).size()); }
    int max_degree() const noexcept { return max_degree_; }
    DegreeProfile degree_profile() const;

    bool contains_vertex(VertexId v) const noexcept { return v >= 0 && v < vertex_count_; }
    std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }
    bool contains(const Element& el) const;

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool has_labels() const noexcept { return !labels_.empty(); }
    /// Label of v, or its decimal index when the graph is unlabelled.
    std::string label(VertexId v) const;

    bool operator==(const Graph& other) const {
        return vertex_count_ == other.vertex_count_ && edges_ == other.edges_ && labels_ == other.labels_;
    }

    friend Graph make_graph(int vertex_count, std::span<const Edge> edge_list,
                            std::vector<std::string> labels);

private:
    int vertex_count_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    // CSR adjacency; neighbour and incident-edge lists are parallel.
    std::vector<std::int32_t> offsets_{0};
    std::vector<VertexId> adjacency_;
    std::vector<EdgeId> incidence_;
};

/// Builds a graph, canonicalizing and deduplicating edges.
/// Throws ConstructionError on an out-of-range endpoint, a self-loop, or a
/// label list whose length is neither 0 nor vertex_count.
Graph make_graph(int vertex_count, std::span<const Edge> edge_list,
                 std::vector<std::string> labels = {});

inline Graph make_graph(int vertex_count, std::initializer_list<Edge> edge_list,
                        std::vector<std::string> labels = {}) {
    return make_graph(vertex_count, std::span<const Edge>(edge_list.begin(), edge_list.size()),
                      std::move(labels));
}

/// K_n. Throws DomainError for n = 0.
Graph complete_graph(int n);
/// K_{a,b} with the a-side on 0..a-1 and the b-side on a..a+b-1.
Graph complete_bipartite(int a, int b);
Graph edgeless_graph(int n);
/// Path on n vertices 0-1-...-(n-1).
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Star with centre 0 and `leaves` leaves.
Graph star_graph(int leaves);

/// True iff a and b must receive different colours in a total colouring:
/// adjacent vertices, edges sharing an endpoint, or an edge and one of its
/// endpoints. Irreflexive. Throws DomainError if either element is not in g.
bool incidence_conflicts(const Graph& g, const Element& a, const Element& b);

}  // namespace totalcol
