#include "totalcol/products.hpp"

#include <string>
#include <vector>

#include "totalcol/errors.hpp"

namespace totalcol {

Product direct_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0) {
        throw DomainError("direct product needs factors with at least one vertex");
    }
    const ProductVertexMap map(g.vertex_count(), h.vertex_count());

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * h.edge_count() * 2);
    for (const Edge& ge : g.edges()) {
        for (const Edge& he : h.edges()) {
            edges.push_back(make_edge(map.index(ge.u, he.u), map.index(ge.v, he.v)));
            edges.push_back(make_edge(map.index(ge.u, he.v), map.index(ge.v, he.u)));
        }
    }

    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(map.size()));
    for (VertexId i = 0; i < g.vertex_count(); ++i)
        for (VertexId j = 0; j < h.vertex_count(); ++j) labels.push_back("(" + g.label(i) + "," + h.label(j) + ")");

    return {make_graph(map.size(), edges, std::move(labels)), map};
}

Graph crown_graph(int m) {
    if (m < 2) throw DomainError("crown graph J_2m needs m >= 2, got " + std::to_string(m));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1));
    for (VertexId k = 0; k < m; ++k)
        for (VertexId t = 0; t < m; ++t)
            if (k != t) edges.push_back({k, m + t});
    std::vector<std::string> labels;
    for (int k = 0; k < m; ++k) labels.push_back("x" + std::to_string(k));
    for (int k = 0; k < m; ++k) labels.push_back("y" + std::to_string(k));
    return make_graph(2 * m, edges, std::move(labels));
}

}  // namespace totalcol
