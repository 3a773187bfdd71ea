#include "totalcol/graph.hpp"

#include <algorithm>

#include "totalcol/errors.hpp"

namespace totalcol {

std::string Element::to_string() const {
    if (is_vertex()) return "v" + std::to_string(pair_.u);
    return "e{" + std::to_string(pair_.u) + "," + std::to_string(pair_.v) + "}";
}

Graph make_graph(int vertex_count, std::span<const Edge> edge_list, std::vector<std::string> labels) {
    if (vertex_count < 0) throw ConstructionError("negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count) {
        throw ConstructionError("label count " + std::to_string(labels.size()) +
                                " does not match vertex count " + std::to_string(vertex_count));
    }

    Graph g;
    g.vertex_count_ = vertex_count;
    g.labels_ = std::move(labels);
    g.edges_.reserve(edge_list.size());
    for (const Edge& raw : edge_list) {
        if (raw.u < 0 || raw.u >= vertex_count || raw.v < 0 || raw.v >= vertex_count) {
            throw ConstructionError("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                                    "} has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
        }
        if (raw.u == raw.v) throw ConstructionError("self-loop at vertex " + std::to_string(raw.u));
        g.edges_.push_back(make_edge(raw.u, raw.v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    std::vector<std::int32_t> degree(static_cast<std::size_t>(vertex_count), 0);
    for (const Edge& e : g.edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    g.offsets_.assign(static_cast<std::size_t>(vertex_count) + 1, 0);
    for (int v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.adjacency_.resize(g.edges_.size() * 2);
    g.incidence_.resize(g.edges_.size() * 2);
    std::vector<std::int32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted, so every neighbour list comes out in ascending order.
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edges_[id];
        g.adjacency_[cursor[e.u]] = e.v;
        g.incidence_[cursor[e.u]++] = id;
        g.adjacency_[cursor[e.v]] = e.u;
        g.incidence_[cursor[e.v]++] = id;
    }
    for (int v = 0; v < vertex_count; ++v) {
        const auto first = g.offsets_[v];
        const auto last = g.offsets_[v + 1];
        std::vector<std::pair<VertexId, EdgeId>> tmp;
        tmp.reserve(static_cast<std::size_t>(last - first));
        for (auto i = first; i < last; ++i) tmp.emplace_back(g.adjacency_[i], g.incidence_[i]);
        std::sort(tmp.begin(), tmp.end());
        for (auto i = first; i < last; ++i) {
            g.adjacency_[i] = tmp[i - first].first;
            g.incidence_[i] = tmp[i - first].second;
        }
    }
    g.max_degree_ = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    return g;
}

std::span<const VertexId> Graph::neighbours(VertexId v) const {
    if (!contains_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

std::span<const EdgeId> Graph::incident_edges(VertexId v) const {
    if (!contains_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    return {incidence_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

DegreeProfile Graph::degree_profile() const {
    DegreeProfile p;
    p.degrees.reserve(static_cast<std::size_t>(vertex_count_));
    for (VertexId v = 0; v < vertex_count_; ++v) p.degrees.push_back(degree(v));
    p.max_degree = max_degree_;
    return p;
}

std::optional<EdgeId> Graph::edge_id(VertexId a, VertexId b) const {
    const Edge key = make_edge(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

bool Graph::contains(const Element& el) const {
    if (el.is_vertex()) return contains_vertex(el.as_vertex());
    return edge_id(el.as_edge().u, el.as_edge().v).has_value();
}

std::string Graph::label(VertexId v) const {
    if (!contains_vertex(v)) throw DomainError("vertex " + std::to_string(v) + " not in graph");
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph complete_graph(int n) {
    if (n <= 0) throw DomainError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return make_graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw DomainError("negative part size");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = 0; v < b; ++v) edges.push_back({u, a + v});
    return make_graph(a + b, edges);
}

Graph edgeless_graph(int n) { return make_graph(n, std::span<const Edge>{}); }

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return make_graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("a simple cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) edges.push_back(make_edge(v, (v + 1) % n));
    return make_graph(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return make_graph(leaves + 1, edges);
}

bool incidence_conflicts(const Graph& g, const Element& a, const Element& b) {
    if (!g.contains(a)) throw DomainError("element " + a.to_string() + " not in graph");
    if (!g.contains(b)) throw DomainError("element " + b.to_string() + " not in graph");
    if (a == b) return false;
    if (a.is_vertex() && b.is_vertex()) return g.adjacent(a.as_vertex(), b.as_vertex());
    if (a.is_edge() && b.is_edge()) {
        const Edge x = a.as_edge();
        const Edge y = b.as_edge();
        return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
    }
    const VertexId v = a.is_vertex() ? a.as_vertex() : b.as_vertex();
    const Edge e = a.is_edge() ? a.as_edge() : b.as_edge();
    return e.u == v || e.v == v;
}

}  // namespace totalcol
