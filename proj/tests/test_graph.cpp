#include <doctest.h>

#include "test_support.hpp"
#include "wellcov/enumerate.hpp"
#include "wellcov/graph.hpp"

using namespace wellcov;
using wellcov::testing::brute_has_cycle;

TEST_CASE("vertex sets behave like sets") {
    VertexSet s = VertexSet::of(6, {0, 2, 5});
    CHECK(s.count() == 3);
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(1));
    CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
    CHECK((s.complemented().to_vector() == std::vector<int>{1, 3, 4}));
    CHECK((s & VertexSet::of(6, {2, 3})).to_vector() == std::vector<int>{2});
    CHECK((s - VertexSet::of(6, {0})).to_vector() == std::vector<int>{2, 5});
    CHECK(VertexSet::of(6, {0, 2}).is_subset_of(s));
}

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), std::invalid_argument);

    Graph g = cycle_graph(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(0, 4));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("edge list round-trips to the canonical sorted order") {
    Graph g(4, {{3, 1}, {0, 2}, {2, 1}});
    CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}});
    Graph h(4, g.edges());
    CHECK(h.edges() == g.edges());
}

TEST_CASE("neighborhoods") {
    SUBCASE("second neighborhood of a C5 vertex") {
        Graph g = cycle_graph(5);  // 0-1-2-3-4-0
        CHECK(neighborhood(g, 0, NeighborhoodKind::second) == VertexSet::of(5, {2, 3}));
    }
    SUBCASE("open neighborhood of an isolated vertex is empty") {
        Graph g = empty_graph(3);
        CHECK(neighborhood(g, 1, NeighborhoodKind::open).empty());
    }
    SUBCASE("closed neighborhood of a path centre is the whole path") {
        Graph g = path_graph(3);
        CHECK(neighborhood(g, 1, NeighborhoodKind::closed) == VertexSet::of(3, {0, 1, 2}));
    }
    SUBCASE("rejects out-of-range vertices") {
        Graph g = path_graph(3);
        CHECK_THROWS_AS(neighborhood(g, 7, NeighborhoodKind::open), std::invalid_argument);
    }
    SUBCASE("second neighborhood never meets the closed neighborhood") {
        for (const Graph& g : connected_graphs_up_to(6))
            for (int v = 0; v < g.vertex_count(); ++v) {
                VertexSet second = neighborhood(g, v, NeighborhoodKind::second);
                CHECK_FALSE(second.intersects(neighborhood(g, v, NeighborhoodKind::closed)));
            }
    }
}

TEST_CASE("domination") {
    Graph c4 = cycle_graph(4);
    CHECK(dominates(c4, VertexSet(4), VertexSet(4)));
    CHECK_FALSE(dominates(c4, VertexSet(4), VertexSet::of(4, {1})));
    CHECK(dominates(c4, VertexSet::of(4, {0}), VertexSet::of(4, {1, 3})));
}

TEST_CASE("cycle containment") {
    CHECK(contains_cycle_len(cycle_graph(5), 5));
    CHECK_FALSE(contains_cycle_len(cycle_graph(5), 3));
    CHECK(contains_cycle_len(complete_graph(4), 4));
    CHECK_THROWS_AS(contains_cycle_len(cycle_graph(5), 8), std::invalid_argument);
    CHECK_THROWS_AS(contains_cycle_len(cycle_graph(5), 2), std::invalid_argument);

    SUBCASE("agrees with exhaustive enumeration on all graphs up to 7 vertices") {
        enumerate_graphs(7, FamilySpec{}, [&](const Graph& g) {
            for (int k = 3; k <= 7; ++k) CHECK(contains_cycle_len(g, k) == brute_has_cycle(g, k));
        });
    }
    SUBCASE("per-vertex variant sees exactly the cycles through the vertex") {
        Graph g(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
        CHECK(vertex_on_cycle_len(g, 0, 3));
        CHECK(vertex_on_cycle_len(g, 4, 3));
        CHECK_FALSE(vertex_on_cycle_len(g, 4, 4));
    }
}

TEST_CASE("girth") {
    CHECK(girth(path_graph(6)) == kGirthInfinity);
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK(girth(complete_graph(4)) == 3);

    SUBCASE("matches the smallest contained cycle length on small graphs") {
        enumerate_graphs(7, FamilySpec{}, [&](const Graph& g) {
            int smallest = kGirthInfinity;
            for (int k = 7; k >= 3; --k)
                if (contains_cycle_len(g, k)) smallest = k;
            CHECK(girth(g) == smallest);
        });
    }
}

TEST_CASE("simplicial vertices") {
    CHECK(is_simplicial(complete_graph(3), 0));
    CHECK_FALSE(is_simplicial(cycle_graph(4), 0));

    Graph g = wellcov::testing::two_triangles_bridge();
    CHECK_FALSE(is_simplicial(g, 2));  // 0 and 3 are nonadjacent neighbours
    CHECK(is_simplicial(g, 0));

    SUBCASE("never flips true to false when an edge is added inside N(v)") {
        enumerate_graphs(6, FamilySpec{}, [&](const Graph& g6) {
            for (int v = 0; v < g6.vertex_count(); ++v) {
                const bool before = is_simplicial(g6, v);
                std::vector<int> nb = g6.adjacency(v).to_vector();
                for (std::size_t i = 0; i < nb.size(); ++i)
                    for (std::size_t j = i + 1; j < nb.size(); ++j) {
                        if (g6.has_edge(nb[i], nb[j])) continue;
                        std::vector<Edge> es = g6.edges();
                        es.emplace_back(nb[i], nb[j]);
                        Graph extended(g6.vertex_count(), es);
                        CHECK_FALSE((before && !is_simplicial(extended, v)));
                    }
            }
        });
    }
}

TEST_CASE("claw detection") {
    CHECK(is_claw_free(cycle_graph(5)));
    CHECK_FALSE(is_claw_free(star_graph(3)));

    // the proof pattern: centre adjacent to three pairwise nonadjacent tips
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    CHECK_FALSE(is_claw_free(g));
}

TEST_CASE("small-graph isomorphism") {
    CHECK(is_isomorphic_small(complete_graph(2), SmallGraph::K2));
    CHECK_FALSE(is_isomorphic_small(path_graph(3), SmallGraph::C5));

    // relabelled five-cycle 0-2-4-1-3-0
    Graph scrambled(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(is_isomorphic_small(scrambled, SmallGraph::C5));
    CHECK(is_isomorphic_small(cycle_graph(7), SmallGraph::C7));
    CHECK_FALSE(is_isomorphic_small(star_graph(2), SmallGraph::K1));
    CHECK(are_isomorphic(star_graph(2), path_graph(3)));
}

TEST_CASE("induced subgraphs renumber consistently") {
    Graph g = cycle_graph(5);
    std::vector<int> to_parent;
    Graph h = g.induced(VertexSet::of(5, {1, 2, 4}), &to_parent);
    CHECK(h.vertex_count() == 3);
    CHECK(to_parent == std::vector<int>{1, 2, 4});
    CHECK(h.has_edge(0, 1));       // 1-2
    CHECK_FALSE(h.has_edge(0, 2)); // 1-4
}

TEST_CASE("connectivity") {
    CHECK(cycle_graph(4).is_connected());
    CHECK_FALSE(Graph(4, {{0, 1}, {2, 3}}).is_connected());
    CHECK(empty_graph(1).is_connected());
    CHECK_FALSE(empty_graph(2).is_connected());
}
