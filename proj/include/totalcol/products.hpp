#pragma once

#include <utility>

#include "totalcol/graph.hpp"

namespace totalcol {

/// Row-major packing of V(G) x V(H): (i, j) <-> i * |V(H)| + j.
/// For fixed i the vertices (i, *) occupy one contiguous index block.
class ProductVertexMap {
public:
    ProductVertexMap() = default;
    ProductVertexMap(int g_order, int h_order) : g_order_(g_order), h_order_(h_order) {}

    int g_order() const noexcept { return g_order_; }
    int h_order() const noexcept { return h_order_; }
    int size() const noexcept { return g_order_ * h_order_; }

    VertexId index(VertexId g_vertex, VertexId h_vertex) const noexcept { return g_vertex * h_order_ + h_vertex; }
    std::pair<VertexId, VertexId> factors(VertexId product_vertex) const noexcept {
        return {product_vertex / h_order_, product_vertex % h_order_};
    }

private:
    int g_order_ = 0;
    int h_order_ = 0;
};

struct Product {
    Graph graph;
    ProductVertexMap map;
};

/// Direct (tensor) product G x H: (u,v) ~ (u',v') iff uu' in E(G) and vv' in
/// E(H). Vertices carry labels "(gLabel,hLabel)". Isolated vertices are kept.
/// Throws DomainError when either factor has no vertices.
Product direct_product(const Graph& g, const Graph& h);

/// Crown graph J_{2m}: K_{m,m} minus a perfect matching. x_k = k and
/// y_k = m + k, with x_k y_t an edge iff k != t. Throws DomainError for m < 2.
Graph crown_graph(int m);

}  // namespace totalcol
