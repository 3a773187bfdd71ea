#include "totalcol/constructions.hpp"

#include <string>
#include <utility>

#include "totalcol/errors.hpp"

namespace totalcol {

CrownTotalColouring crown_total_colouring(int m) {
    const RainbowKmm rainbow = rainbow_kmm(m);
    const auto& sigma = rainbow.square.transversal();
    std::vector<int> sigma_inverse(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) sigma_inverse[sigma[i]] = i;

    CrownTotalColouring out{crown_graph(m), {}, std::vector<Colour>(static_cast<std::size_t>(m))};
    out.colouring = TotalColouring(out.graph);

    // Each removed matching edge x_i y_σ(i) hands its colour to both ends;
    // after relabelling y_σ(i) -> y_i those ends are x_i and y_i.
    for (int i = 0; i < m; ++i) {
        const Colour c = rainbow.colouring.colour(rainbow.matching[i]);
        out.colouring.set_vertex(i, c);
        out.colouring.set_vertex(m + i, c);
        out.vertex_colour_of[i] = c;
    }
    for (EdgeId id = 0; id < rainbow.graph.edge_count(); ++id) {
        const Edge& e = rainbow.graph.edge(id);
        const int x = e.u;
        const int y = e.v - m;
        if (sigma[x] == y) continue;
        out.colouring.set_edge(out.graph, x, m + sigma_inverse[y], rainbow.colouring.colour(id));
    }
    return out;
}

ColouredGraph lift_bipartite(const Graph& g, const TotalColouring& f, const Graph& h, const Bipartition& parts) {
    const Graph g_k2 = direct_product(g, complete_graph(2)).graph;
    if (!f.is_complete_for(g_k2)) {
        throw PreconditionError("source colouring does not colour every element of G x K2");
    }
    if (!verify_total(g_k2, f).valid) throw PreconditionError("source colouring of G x K2 is not proper");
    const int delta_g = g.max_degree();
    if (f.palette_size() != delta_g + 1) {
        throw PreconditionError("source colouring of G x K2 uses " + std::to_string(f.palette_size()) +
                                " colours; lifting needs exactly Δ(G)+1 = " + std::to_string(delta_g + 1));
    }
    parts.validate(h);

    const TotalColouring source = normalize_palette(f);
    Product product = direct_product(g, h);
    const ProductVertexMap& map = product.map;
    const Graph& gh = product.graph;
    TotalColouring out(gh);

    if (h.edge_count() == 0) {
        for (VertexId v = 0; v < gh.vertex_count(); ++v) out.set_vertex(v, 0);
        return {std::move(product.graph), std::move(out)};
    }

    // (v_k, x) copies (v_k, z_1); (v_k, y) copies (v_k, z_2).
    auto z_vertex = [](VertexId k, bool left) { return 2 * k + (left ? 0 : 1); };
    for (VertexId k = 0; k < g.vertex_count(); ++k)
        for (VertexId w = 0; w < h.vertex_count(); ++w)
            out.set_vertex(map.index(k, w), source.vertex_colour(z_vertex(k, parts.is_left(w))));

    // Edges over one colour class C of H copy the matching edge of G x K2.
    const EdgeColouring h_colouring = bipartite_delta_edge_colouring(h, parts);
    for (EdgeId c_edge : colour_class(h_colouring, 0)) {
        const Edge& xy = h.edge(c_edge);
        const VertexId x = parts.is_left(xy.u) ? xy.u : xy.v;
        const VertexId y = x == xy.u ? xy.v : xy.u;
        for (const Edge& ge : g.edges()) {
            for (auto [k, t] : {std::pair{ge.u, ge.v}, std::pair{ge.v, ge.u}}) {
                const Colour c = source.colour_of(g_k2, Element::edge(z_vertex(k, true), z_vertex(t, false)));
                out.set_edge(gh, map.index(k, x), map.index(t, y), c);
            }
        }
    }

    // Everything else: a bipartite graph of max degree Δ(G)(Δ(H)-1).
    std::vector<Edge> residual_edges;
    for (EdgeId id = 0; id < gh.edge_count(); ++id)
        if (out.edge_colour(id) == kUncoloured) residual_edges.push_back(gh.edge(id));
    const Graph residual = make_graph(gh.vertex_count(), residual_edges);
    std::vector<std::uint8_t> sides(static_cast<std::size_t>(gh.vertex_count()));
    for (VertexId v = 0; v < gh.vertex_count(); ++v) sides[v] = parts.is_left(map.factors(v).second) ? 0 : 1;
    const EdgeColouring residual_colouring = bipartite_delta_edge_colouring(residual, Bipartition(std::move(sides)));
    for (EdgeId id = 0; id < residual.edge_count(); ++id) {
        const Edge& e = residual.edge(id);
        out.set_edge(gh, e.u, e.v, delta_g + 1 + residual_colouring.colour(id));
    }
    return {std::move(product.graph), std::move(out)};
}

ColouredGraph knm_total_colouring(int n, int m) {
    if (n < 3 || m < 3) {
        throw DomainError("K_n x K_m construction needs n, m >= 3, got (" + std::to_string(n) + "," +
                          std::to_string(m) + ")");
    }
    if (n % 2 == 1 && m % 2 == 1) {
        throw OpenProblemError("K_" + std::to_string(n) + " x K_" + std::to_string(m) +
                               ": both factors odd, the total chromatic number is an open problem");
    }
    // even_n is the 1-factorized factor.
    int even_n = n;
    int other_m = m;
    if (n % 2 == 1 || (m % 2 == 0 && m > n)) std::swap(even_n, other_m);
    const bool swapped = even_n != n;

    const CrownTotalColouring h = crown_total_colouring(other_m);
    const EdgeColouring l = one_factorization(even_n);
    const EdgeColouring f = crown_edge_colouring(other_m);
    const Graph kn = complete_graph(even_n);
    const Graph& crown = h.graph;
    auto crown_edge = [&](int k, int t) { return *crown.edge_id(k, other_m + t); };

    const Graph inner = direct_product(kn, complete_graph(other_m)).graph;
    TotalColouring g(inner);
    auto at = [&](VertexId i, VertexId k) { return i * other_m + k; };
    for (VertexId i = 0; i < even_n; ++i)
        for (VertexId k = 0; k < other_m; ++k) g.set_vertex(at(i, k), h.vertex_colour_of[k]);

    for (EdgeId id = 0; id < kn.edge_count(); ++id) {
        const auto [i, j] = kn.edge(id);
        const Colour band = l.colour(id);
        for (int k = 0; k < other_m; ++k) {
            for (int t = 0; t < other_m; ++t) {
                if (k == t) continue;
                const Colour c = band == 0 ? h.colouring.edge_colour(crown_edge(k, t))
                                           : band * (other_m - 1) + f.colour(crown_edge(k, t)) + 1;
                g.set_edge(inner, at(i, k), at(j, t), c);
            }
        }
    }
    if (!swapped) return {inner, std::move(g)};

    // Carry (v_i, u_k) over to the caller's order (u_k, v_i).
    Graph outer = direct_product(complete_graph(n), complete_graph(m)).graph;
    auto flip = [&](VertexId p) { return (p % other_m) * even_n + p / other_m; };
    TotalColouring out(outer);
    for (VertexId p = 0; p < inner.vertex_count(); ++p) out.set_vertex(flip(p), g.vertex_colour(p));
    for (EdgeId id = 0; id < inner.edge_count(); ++id) {
        const Edge& e = inner.edge(id);
        out.set_edge(outer, flip(e.u), flip(e.v), g.edge_colour(id));
    }
    return {std::move(outer), std::move(out)};
}

ColouredGraph kn_times_k2_colouring(int n) {
    const CrownTotalColouring crown = crown_total_colouring(n);
    Graph kn_k2 = direct_product(complete_graph(n), complete_graph(2)).graph;
    auto to_crown = [n](VertexId p) { return p % 2 == 0 ? p / 2 : n + p / 2; };
    TotalColouring f(kn_k2);
    for (VertexId p = 0; p < kn_k2.vertex_count(); ++p) f.set_vertex(p, crown.colouring.vertex_colour(to_crown(p)));
    for (EdgeId id = 0; id < kn_k2.edge_count(); ++id) {
        const Edge& e = kn_k2.edge(id);
        f.set_edge(id, crown.colouring.colour_of(crown.graph, Element::edge(to_crown(e.u), to_crown(e.v))));
    }
    return {std::move(kn_k2), std::move(f)};
}

ColouredGraph kn_times_bipartite(int n, const Graph& h, const Bipartition& parts) {
    if (n < 1) throw DomainError("K_n needs n >= 1");
    if (n == 2) throw PreconditionError("K2 x H is excluded: K2 x K2 = 2K2 is type II");
    if (n == 1) {
        parts.validate(h);
        Graph product = direct_product(complete_graph(1), h).graph;
        TotalColouring tc(product);
        for (VertexId v = 0; v < product.vertex_count(); ++v) tc.set_vertex(v, 0);
        return {std::move(product), std::move(tc)};
    }
    const ColouredGraph source = kn_times_k2_colouring(n);
    return lift_bipartite(complete_graph(n), source.colouring, h, parts);
}

}  // namespace totalcol
