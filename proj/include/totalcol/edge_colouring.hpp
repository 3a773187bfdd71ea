#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "totalcol/colouring.hpp"
#include "totalcol/graph.hpp"

namespace totalcol {

/// Two disjoint vertex sets covering V, stored as a side flag per vertex
/// (0 = left/X, 1 = right/Y).
class Bipartition {
public:
    Bipartition() = default;
    explicit Bipartition(std::vector<std::uint8_t> sides);

    /// Two-colours g by BFS, lowest index first in each component on the
    /// left. nullopt if g has an odd cycle.
    static std::optional<Bipartition> find(const Graph& g);
    /// First `left` vertices on the left, the remaining `right` on the right.
    static Bipartition split(int left, int right);

    int vertex_count() const noexcept { return static_cast<int>(sides_.size()); }
    bool is_left(VertexId v) const { return sides_.at(static_cast<std::size_t>(v)) == 0; }
    std::vector<VertexId> left() const;
    std::vector<VertexId> right() const;
    const std::vector<std::uint8_t>& sides() const noexcept { return sides_; }

    /// Throws NotBipartiteError if the sizes disagree or some edge of g lies
    /// within one part.
    void validate(const Graph& g) const;

private:
    std::vector<std::uint8_t> sides_;
};

/// Proper edge colouring of a bipartite graph with exactly Δ colours 0..Δ-1
/// (Kőnig). Edges are inserted in EdgeId order; each takes the lowest colour
/// free at its left endpoint, flipping an alternating path at the right
/// endpoint when that colour is busy there.
EdgeColouring bipartite_delta_edge_colouring(const Graph& h, const Bipartition& parts);

/// Edge ids carrying colour c, ascending. Empty if c is unused.
std::vector<EdgeId> colour_class(const EdgeColouring& ec, Colour c);

/// 1-factorization of K_n (n even) by the circle method: vertex n-1 fixed,
/// round r pairs n-1 with r and (r+k, r-k) mod (n-1). Colour r is round r.
/// Indexed against complete_graph(n). Throws DomainError for odd n or n < 2.
EdgeColouring one_factorization(int n);

/// m x m Latin square over 0..m-1 with a transversal: row i's transversal
/// cell is (i, transversal[i]).
class LatinSquare {
public:
    LatinSquare(int order, std::vector<int> cells, std::vector<int> transversal);

    int order() const noexcept { return order_; }
    int symbol(int row, int col) const { return cells_.at(static_cast<std::size_t>(row * order_ + col)); }
    const std::vector<int>& transversal() const noexcept { return transversal_; }
    std::vector<std::vector<int>> rows() const;

    /// Every symbol exactly once per row and per column.
    bool is_latin() const;
    /// transversal is a permutation and its m cells carry distinct symbols.
    bool transversal_is_rainbow() const;

private:
    int order_;
    std::vector<int> cells_;
    std::vector<int> transversal_;
};

struct RainbowKmm {
    LatinSquare square;
    /// K_{m,m} with x_i = i and y_j = m + j.
    Graph graph;
    /// colour(x_i y_j) = square.symbol(i, j).
    EdgeColouring colouring;
    /// Edge ids of {x_i, y_transversal[i]}, in row order.
    std::vector<EdgeId> matching;
};

/// Proper m-edge colouring of K_{m,m} with a perfect rainbow matching.
/// Odd m: cyclic square (i + j) mod m, identity transversal.
/// Even m: the cyclic square of order m-1 prolonged along its main diagonal,
/// with transversal i -> i+1 mod (m-1) on the old rows and (m-1, m-1).
/// Throws NoRainbowError for m <= 2.
RainbowKmm rainbow_kmm(int m);

/// Left = x side, right = y side of crown_graph(m).
Bipartition crown_bipartition(int m);

/// Proper (m-1)-edge colouring of crown_graph(m).
EdgeColouring crown_edge_colouring(int m);

}  // namespace totalcol
