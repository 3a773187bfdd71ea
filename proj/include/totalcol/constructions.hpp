#pragma once

#include <vector>

#include "totalcol/colouring.hpp"
#include "totalcol/edge_colouring.hpp"
#include "totalcol/graph.hpp"
#include "totalcol/products.hpp"

namespace totalcol {

/// A graph together with a total colouring built for it.
struct ColouredGraph {
    Graph graph;
    TotalColouring colouring;
};

/// m-total colouring of J_{2m} = crown_graph(m) with palette 0..m-1.
/// x_k and y_k share a colour and k -> that colour is a bijection, so
/// x_k and y_t share a colour iff k = t.
struct CrownTotalColouring {
    Graph graph;
    TotalColouring colouring;
    /// vertex_colour_of[k] = colour of x_k (= colour of y_k).
    std::vector<Colour> vertex_colour_of;
};

/// Deletes the rainbow matching of rainbow_kmm(m), gives both endpoints of
/// each deleted edge that edge's colour, and relabels y_{σ(i)} -> y_i so the
/// result sits on crown_graph(m). Throws NoRainbowError for m <= 2.
CrownTotalColouring crown_total_colouring(int m);

/// Lifts a (Δ(g)+1)-total colouring f of g x K2 to a total colouring of
/// g x h for bipartite h, using Δ(g)Δ(h)+1 colours.
///
/// g x K2 is indexed as direct_product(g, complete_graph(2)): (v_k, z_1) is
/// 2k and (v_k, z_2) is 2k+1. Left vertices of h take the z_1 pattern, right
/// vertices the z_2 pattern. Edges over colour class 0 of h's Δ-edge
/// colouring copy f's edge colours; the remaining edges are Δ-edge coloured
/// as a bipartite graph in the block [Δ(g)+1, Δ(g)Δ(h)+1). f's palette is
/// compacted to 0..Δ(g) first.
///
/// Throws PreconditionError if f is not a valid total colouring of g x K2
/// with exactly Δ(g)+1 colours, NotBipartiteError if parts does not fit h.
ColouredGraph lift_bipartite(const Graph& g, const TotalColouring& f, const Graph& h, const Bipartition& parts);

/// Type I total colouring of K_n x K_m for n, m >= 3 with n or m even,
/// using (n-1)(m-1)+1 colours. The graph is direct_product(K_n, K_m) in the
/// caller's argument order; internally the even factor (the larger one if
/// both are even) plays the role of the 1-factorized clique.
///
/// Throws OpenProblemError when n and m are both odd, DomainError when
/// either is below 3.
ColouredGraph knm_total_colouring(int n, int m);

/// Type I total colouring of K_n x h for bipartite h, via the crown
/// colouring of K_n x K2 and lift_bipartite. n = 1 gives the edgeless
/// product coloured with one colour. Throws PreconditionError for n = 2
/// (K2 x K2 is type II) and DomainError for n < 1.
ColouredGraph kn_times_bipartite(int n, const Graph& h, const Bipartition& parts);

/// crown_total_colouring(n) carried over to direct_product(K_n, K2) by
/// (v_k, z_1) -> x_k, (v_k, z_2) -> y_k.
ColouredGraph kn_times_k2_colouring(int n);

}  // namespace totalcol
