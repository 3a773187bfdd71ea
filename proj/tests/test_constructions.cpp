#include "doctest.h"

#include <random>
#include <set>

#include "support/generators.hpp"
#include "totalcol/constructions.hpp"
#include "totalcol/errors.hpp"
#include "totalcol/oracle.hpp"

using namespace totalcol;

namespace {

void check_exact(const ColouredGraph& cg, int expected_colours) {
    const auto report = verify_total(cg.graph, cg.colouring);
    CHECK(report.valid);
    CHECK(report.colours_used == expected_colours);
}

}  // namespace

TEST_CASE("crown_total_colouring m = 3 from the cyclic square") {
    const auto h = crown_total_colouring(3);
    CHECK(verify_total(h.graph, h.colouring).valid);
    CHECK(h.colouring.palette_size() == 3);
    CHECK(h.vertex_colour_of == std::vector<Colour>{0, 2, 1});
}

TEST_CASE("crown_total_colouring invariants") {
    for (int m = 3; m <= 20; ++m) {
        CAPTURE(m);
        const auto h = crown_total_colouring(m);
        const auto report = verify_total(h.graph, h.colouring);
        CHECK(report.valid);
        CHECK(report.colours_used == m);
        CHECK(report.colours_used == h.graph.max_degree() + 1);
        CHECK(h.colouring.palette().back() == m - 1);
        std::set<Colour> distinct;
        for (int k = 0; k < m; ++k) {
            CHECK(h.colouring.vertex_colour(k) == h.vertex_colour_of[k]);
            CHECK(h.colouring.vertex_colour(m + k) == h.vertex_colour_of[k]);
            distinct.insert(h.vertex_colour_of[k]);
        }
        CHECK(distinct.size() == static_cast<std::size_t>(m));
    }
    CHECK_THROWS_AS(crown_total_colouring(2), NoRainbowError);
}

TEST_CASE("lift_bipartite examples") {
    const Graph k3 = complete_graph(3);
    const auto f3 = kn_times_k2_colouring(3);

    const Graph k2 = complete_graph(2);
    check_exact(lift_bipartite(k3, f3.colouring, k2, Bipartition::split(1, 1)), 3);

    const Graph c6 = cycle_graph(6);
    const auto k3c6 = lift_bipartite(k3, f3.colouring, c6, *Bipartition::find(c6));
    CHECK(k3c6.graph.max_degree() == 4);
    check_exact(k3c6, 5);

    const Graph k4 = complete_graph(4);
    const Graph k33 = complete_bipartite(3, 3);
    check_exact(lift_bipartite(k4, kn_times_k2_colouring(4).colouring, k33, Bipartition::split(3, 3)), 10);
}

TEST_CASE("lift_bipartite over K2 reproduces the source colouring") {
    const Graph k3 = complete_graph(3);
    const auto f = kn_times_k2_colouring(3);
    const auto lifted = lift_bipartite(k3, f.colouring, complete_graph(2), Bipartition::split(1, 1));
    CHECK(lifted.graph.edges() == f.graph.edges());
    CHECK(lifted.colouring == normalize_palette(f.colouring));
}

TEST_CASE("lift_bipartite vertex colours depend only on the side of h") {
    const Graph k4 = complete_graph(4);
    const auto f = kn_times_k2_colouring(4);
    const Graph p5 = path_graph(5);
    const auto parts = *Bipartition::find(p5);
    const auto lifted = lift_bipartite(k4, f.colouring, p5, parts);
    const auto src = normalize_palette(f.colouring);
    for (VertexId k = 0; k < 4; ++k)
        for (VertexId w = 0; w < 5; ++w)
            CHECK(lifted.colouring.vertex_colour(k * 5 + w) == src.vertex_colour(2 * k + (parts.is_left(w) ? 0 : 1)));
}

TEST_CASE("lift_bipartite edge cases") {
    const Graph k3 = complete_graph(3);
    const auto f = kn_times_k2_colouring(3);

    // Edgeless h: one colour.
    check_exact(lift_bipartite(k3, f.colouring, edgeless_graph(4), Bipartition::split(2, 2)), 1);
    // Δ(h) = 1: no residual colours.
    const Graph matching = make_graph(4, {{0, 2}, {1, 3}});
    check_exact(lift_bipartite(k3, f.colouring, matching, Bipartition::split(2, 2)), 3);
    // Edgeless g: the product is edgeless and G x K2 needs one colour.
    const Graph e2 = edgeless_graph(2);
    const TotalColouring one({0, 0, 0, 0}, {});
    check_exact(lift_bipartite(e2, one, cycle_graph(4), *Bipartition::find(cycle_graph(4))), 1);
}

TEST_CASE("lift_bipartite accepts non-contiguous source palettes") {
    const Graph k3 = complete_graph(3);
    const auto f = kn_times_k2_colouring(3);
    std::vector<Colour> v = f.colouring.vertex_colours(), e = f.colouring.edge_colours();
    for (auto& c : v) c = 10 * c + 4;
    for (auto& c : e) c = 10 * c + 4;
    check_exact(lift_bipartite(k3, TotalColouring(v, e), cycle_graph(6), *Bipartition::find(cycle_graph(6))), 5);
}

TEST_CASE("lift_bipartite preconditions") {
    const Graph k3 = complete_graph(3);
    const auto f = kn_times_k2_colouring(3);
    const Graph c6 = cycle_graph(6);
    const auto parts = *Bipartition::find(c6);

    TotalColouring broken = f.colouring;
    broken.set_edge(0, broken.vertex_colour(0));
    // Edge 0 of C6 = K3 x K2 touches vertex 0, so this is now improper.
    CHECK_THROWS_AS(lift_bipartite(k3, broken, c6, parts), PreconditionError);

    // Valid but with Δ+2 colours.
    TotalColouring wide = f.colouring;
    wide.set_edge(0, 7);
    REQUIRE(verify_total(f.graph, wide).valid);
    CHECK_THROWS_AS(lift_bipartite(k3, wide, c6, parts), PreconditionError);

    CHECK_THROWS_AS(lift_bipartite(k3, TotalColouring(f.graph), c6, parts), PreconditionError);
    CHECK_THROWS_AS(lift_bipartite(k3, f.colouring, c6, Bipartition::split(3, 3)), NotBipartiteError);
}

TEST_CASE("knm_total_colouring examples") {
    check_exact(knm_total_colouring(4, 3), 7);
    const auto swapped = knm_total_colouring(3, 4);
    check_exact(swapped, 7);
    CHECK(swapped.graph.edges() == direct_product(complete_graph(3), complete_graph(4)).graph.edges());
    check_exact(knm_total_colouring(6, 5), 21);
    CHECK_THROWS_AS(knm_total_colouring(3, 3), OpenProblemError);
    CHECK_THROWS_AS(knm_total_colouring(5, 7), OpenProblemError);
    CHECK_THROWS_AS(knm_total_colouring(2, 4), DomainError);
    CHECK_THROWS_AS(knm_total_colouring(4, 2), DomainError);
}

TEST_CASE("knm_total_colouring colour bands") {
    // In the (4,3) orientation, edges over l-class c >= 1 lie in
    // [c(m-1)+1, c(m-1)+m-1]; bands are ordered and clear of vertex colours.
    const int n = 6, m = 5;
    const auto cg = knm_total_colouring(n, m);
    const auto l = one_factorization(n);
    const Graph kn = complete_graph(n);
    for (EdgeId id = 0; id < cg.graph.edge_count(); ++id) {
        const Edge& e = cg.graph.edge(id);
        const int band = l.colour(*kn.edge_id(e.u / m, e.v / m));
        const Colour c = cg.colouring.edge_colour(id);
        if (band == 0) {
            CHECK(c < m);
        } else {
            CHECK(c > m - 1);
            CHECK(c >= band * (m - 1) + 1);
            CHECK(c <= band * (m - 1) + m - 1);
        }
    }
    for (Colour c : cg.colouring.vertex_colours()) CHECK(c < m);
}

TEST_CASE("property: knm sweep over supported (n, m)") {
    for (int n = 3; n <= 9; ++n)
        for (int m = 3; m <= 9; ++m) {
            if (n % 2 == 1 && m % 2 == 1) continue;
            CAPTURE(n);
            CAPTURE(m);
            const auto cg = knm_total_colouring(n, m);
            CHECK(cg.graph.max_degree() == (n - 1) * (m - 1));
            check_exact(cg, (n - 1) * (m - 1) + 1);
        }
}

TEST_CASE("kn_times_bipartite") {
    check_exact(kn_times_bipartite(3, complete_graph(2), Bipartition::split(1, 1)), 3);
    const Graph p4 = path_graph(4);
    check_exact(kn_times_bipartite(4, p4, *Bipartition::find(p4)), 7);
    check_exact(kn_times_bipartite(1, p4, *Bipartition::find(p4)), 1);
    CHECK_THROWS_AS(kn_times_bipartite(2, p4, *Bipartition::find(p4)), PreconditionError);
    CHECK_THROWS_AS(kn_times_bipartite(0, p4, *Bipartition::find(p4)), DomainError);
}

TEST_CASE("property: lifting oracle-found source colourings over random bipartite graphs") {
    std::mt19937 rng(31337);
    int lifted = 0;
    for (int trial = 0; trial < 80 && lifted < 40; ++trial) {
        const Graph g = testing::random_graph(rng, 2 + trial % 4, 0.6);
        const Graph g_k2 = direct_product(g, complete_graph(2)).graph;
        const auto oracle = exact_chi_total(g_k2, SearchBudget::nodes(200000));
        if (oracle.chi_total() != g.max_degree() + 1) continue;
        const auto h = testing::random_bipartite(rng, 2 + trial % 7, 0.5);
        const auto cg = lift_bipartite(g, *oracle.witness, h.graph, h.parts);
        CAPTURE(trial);
        check_exact(cg, g.max_degree() * h.graph.max_degree() + 1);
        ++lifted;
    }
    CHECK(lifted >= 20);
}
