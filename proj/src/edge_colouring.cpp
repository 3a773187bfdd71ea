#include "totalcol/edge_colouring.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "totalcol/errors.hpp"
#include "totalcol/products.hpp"

namespace totalcol {

Bipartition::Bipartition(std::vector<std::uint8_t> sides) : sides_(std::move(sides)) {
    for (auto s : sides_)
        if (s > 1) throw DomainError("bipartition side flags must be 0 or 1");
}

std::optional<Bipartition> Bipartition::find(const Graph& g) {
    constexpr std::uint8_t kUnseen = 2;
    std::vector<std::uint8_t> sides(static_cast<std::size_t>(g.vertex_count()), kUnseen);
    std::deque<VertexId> queue;
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (sides[root] != kUnseen) continue;
        sides[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const VertexId v = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbours(v)) {
                if (sides[w] == kUnseen) {
                    sides[w] = static_cast<std::uint8_t>(1 - sides[v]);
                    queue.push_back(w);
                } else if (sides[w] == sides[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return Bipartition(std::move(sides));
}

Bipartition Bipartition::split(int left, int right) {
    std::vector<std::uint8_t> sides(static_cast<std::size_t>(left), 0);
    sides.resize(static_cast<std::size_t>(left + right), 1);
    return Bipartition(std::move(sides));
}

std::vector<VertexId> Bipartition::left() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (sides_[v] == 0) out.push_back(v);
    return out;
}

std::vector<VertexId> Bipartition::right() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (sides_[v] == 1) out.push_back(v);
    return out;
}

void Bipartition::validate(const Graph& g) const {
    if (vertex_count() != g.vertex_count()) {
        throw NotBipartiteError("bipartition covers " + std::to_string(vertex_count()) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
    }
    for (const Edge& e : g.edges()) {
        if (sides_[e.u] == sides_[e.v]) {
            throw NotBipartiteError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    "} lies within one part");
        }
    }
}

EdgeColouring bipartite_delta_edge_colouring(const Graph& h, const Bipartition& parts) {
    parts.validate(h);
    const int delta = h.max_degree();
    EdgeColouring result(h);
    if (delta == 0) return result;

    // at[v * delta + c] is the edge of colour c at v, or -1.
    std::vector<EdgeId> at(static_cast<std::size_t>(h.vertex_count()) * delta, -1);
    auto slot = [&](VertexId v, Colour c) -> EdgeId& { return at[static_cast<std::size_t>(v) * delta + c]; };
    auto lowest_free = [&](VertexId v) {
        Colour c = 0;
        while (slot(v, c) != -1) ++c;
        return c;
    };
    auto other_end = [&](EdgeId e, VertexId v) {
        const Edge& ed = h.edge(e);
        return ed.u == v ? ed.v : ed.u;
    };

    std::vector<EdgeId> path;
    for (EdgeId id = 0; id < h.edge_count(); ++id) {
        const Edge& e = h.edge(id);
        const VertexId x = parts.is_left(e.u) ? e.u : e.v;
        const VertexId y = other_end(id, x);
        const Colour a = lowest_free(x);
        if (slot(y, a) != -1) {
            // Swap a and b along the a/b path from y. It cannot reach x:
            // it would arrive on an a-edge at a left vertex, and x has none.
            const Colour b = lowest_free(y);
            path.clear();
            VertexId walk = y;
            Colour want = a;
            while (slot(walk, want) != -1) {
                const EdgeId pe = slot(walk, want);
                path.push_back(pe);
                walk = other_end(pe, walk);
                want = want == a ? b : a;
            }
            for (EdgeId pe : path) {
                const Edge& ped = h.edge(pe);
                slot(ped.u, result.colour(pe)) = -1;
                slot(ped.v, result.colour(pe)) = -1;
            }
            for (EdgeId pe : path) {
                const Edge& ped = h.edge(pe);
                const Colour swapped = result.colour(pe) == a ? b : a;
                result.set(pe, swapped);
                slot(ped.u, swapped) = pe;
                slot(ped.v, swapped) = pe;
            }
        }
        result.set(id, a);
        slot(x, a) = id;
        slot(y, a) = id;
    }
    return result;
}

std::vector<EdgeId> colour_class(const EdgeColouring& ec, Colour c) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(ec.size()); ++e)
        if (ec.colour(e) == c) out.push_back(e);
    return out;
}

EdgeColouring one_factorization(int n) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("1-factorization of K_n needs even n >= 2, got " + std::to_string(n));
    }
    const Graph kn = complete_graph(n);
    EdgeColouring l(kn);
    const int rim = n - 1;
    for (int round = 0; round < rim; ++round) {
        l.set(*kn.edge_id(round, n - 1), round);
        for (int k = 1; k < n / 2; ++k) {
            const VertexId a = (round + k) % rim;
            const VertexId b = (round - k + rim) % rim;
            l.set(*kn.edge_id(a, b), round);
        }
    }
    return l;
}

LatinSquare::LatinSquare(int order, std::vector<int> cells, std::vector<int> transversal)
    : order_(order), cells_(std::move(cells)), transversal_(std::move(transversal)) {
    if (order_ < 0 || cells_.size() != static_cast<std::size_t>(order_) * order_ ||
        transversal_.size() != static_cast<std::size_t>(order_)) {
        throw DomainError("Latin square dimensions do not match its order");
    }
}

std::vector<std::vector<int>> LatinSquare::rows() const {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
    for (int r = 0; r < order_; ++r) out[r].assign(cells_.begin() + r * order_, cells_.begin() + (r + 1) * order_);
    return out;
}

bool LatinSquare::is_latin() const {
    for (int i = 0; i < order_; ++i) {
        std::vector<bool> in_row(static_cast<std::size_t>(order_)), in_col(static_cast<std::size_t>(order_));
        for (int j = 0; j < order_; ++j) {
            const int r = symbol(i, j);
            const int c = symbol(j, i);
            if (r < 0 || r >= order_ || c < 0 || c >= order_ || in_row[r] || in_col[c]) return false;
            in_row[r] = in_col[c] = true;
        }
    }
    return true;
}

bool LatinSquare::transversal_is_rainbow() const {
    std::vector<bool> col_seen(static_cast<std::size_t>(order_)), sym_seen(static_cast<std::size_t>(order_));
    for (int i = 0; i < order_; ++i) {
        const int col = transversal_[i];
        if (col < 0 || col >= order_ || col_seen[col]) return false;
        col_seen[col] = true;
        const int s = symbol(i, col);
        if (s < 0 || s >= order_ || sym_seen[s]) return false;
        sym_seen[s] = true;
    }
    return true;
}

RainbowKmm rainbow_kmm(int m) {
    if (m <= 2) {
        throw NoRainbowError("K_{" + std::to_string(m) + "," + std::to_string(m) +
                             "} has no m-edge colouring with a perfect rainbow matching (needs m >= 3)");
    }
    std::vector<int> cells(static_cast<std::size_t>(m) * m);
    std::vector<int> transversal(static_cast<std::size_t>(m));
    if (m % 2 == 1) {
        // Diagonal symbols 2i mod m are distinct because 2 is a unit mod m.
        for (int i = 0; i < m; ++i) {
            transversal[i] = i;
            for (int j = 0; j < m; ++j) cells[i * m + j] = (i + j) % m;
        }
    } else {
        // Prolong the cyclic square of odd order k = m - 1 along its main
        // diagonal: diagonal cells take the new symbol k and their old
        // symbols move to row k and column k. The untouched diagonal
        // {(i, i+1 mod k)} carries all of 0..k-1, and (k, k) adds k.
        const int k = m - 1;
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) cells[i * m + j] = i == j ? k : (i + j) % k;
            cells[i * m + k] = (2 * i) % k;
            cells[k * m + i] = (2 * i) % k;
            transversal[i] = (i + 1) % k;
        }
        cells[k * m + k] = k;
        transversal[k] = k;
    }
    LatinSquare square(m, std::move(cells), std::move(transversal));

    Graph kmm = complete_bipartite(m, m);
    EdgeColouring colouring(kmm);
    std::vector<EdgeId> matching;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) colouring.set(*kmm.edge_id(i, m + j), square.symbol(i, j));
        matching.push_back(*kmm.edge_id(i, m + square.transversal()[i]));
    }
    return {std::move(square), std::move(kmm), std::move(colouring), std::move(matching)};
}

Bipartition crown_bipartition(int m) { return Bipartition::split(m, m); }

EdgeColouring crown_edge_colouring(int m) { return bipartite_delta_edge_colouring(crown_graph(m), crown_bipartition(m)); }

}  // namespace totalcol
