#include "oracles.hpp"

#include "twcert/certificate.hpp"
#include "twcert/generators.hpp"
#include "twcert/lemmas.hpp"

#include <doctest.h>

#include <random>

using namespace twcert;

TEST_SUITE("generators")
{
    TEST_CASE("grid sizes and landmarks")
    {
        auto g3 = make_grid(3);
        CHECK(g3.graph.vertex_count() == 9);
        CHECK(g3.graph.edge_count() == 12);
        CHECK(g3.outer.length() == 8);
        CHECK(g3.faces.size() == 4);

        auto g2 = make_grid(2);
        CHECK(g2.outer.edges() == EdgeSet::full(g2.graph));
        CHECK(g2.faces.size() == 1);

        for (int n = 2; n <= 9; ++n) {
            auto grid = make_grid(n);
            CHECK(grid.graph.vertex_count() == n * n);
            CHECK(grid.graph.edge_count() == 2 * n * (n - 1));
            CHECK(grid.outer.length() == 4 * (n - 1));
            CHECK(static_cast<int>(grid.faces.size()) == (n - 1) * (n - 1));
            CHECK(f2_sum(grid.graph, std::span<const Cycle>(grid.faces)) == grid.outer.edges());
            CHECK(as_cycle(grid.graph, grid.outer.edges()));
            for (const auto & f : grid.faces) {
                CHECK(f.length() == 4);
            }
        }
        CHECK_THROWS_AS((void)make_grid(1), std::invalid_argument);
    }

    TEST_CASE("grid adjacency is unit Euclidean distance")
    {
        auto grid = make_grid(5);
        for (int a = 0; a < 25; ++a) {
            for (int b = a + 1; b < 25; ++b) {
                int di = a / 5 - b / 5;
                int dj = a % 5 - b % 5;
                CHECK((grid.graph.find_edge(a, b) >= 0) == (di * di + dj * dj == 1));
            }
        }
        CHECK(grid.vertex(2, 3) == 7);
    }

    TEST_CASE("wheel sizes and landmarks")
    {
        auto w5 = make_wheel(5);
        CHECK(w5.graph.vertex_count() == 6);
        CHECK(w5.graph.edge_count() == 10);
        CHECK(w5.hub == 5);
        for (int n = 3; n <= 10; ++n) {
            auto w = make_wheel(n);
            CHECK(w.triangles.size() == static_cast<std::size_t>(n));
            CHECK(f2_sum(w.graph, std::span<const Cycle>(w.triangles)) == w.rim.edges());
            CHECK(w.graph.degree(w.hub) == n);
        }
        for (int n = 4; n <= 9; ++n) {
            CHECK(exact_treewidth(make_wheel(n).graph) == 3);
        }
        CHECK_THROWS_AS((void)make_wheel(2), std::invalid_argument);
    }

    TEST_CASE("wall structure")
    {
        for (int t = 2; t <= 6; ++t) {
            auto wall = make_wall(t);
            CHECK(wall.graph.vertex_count() == 2 * t * t - 2);
            CHECK(static_cast<int>(wall.bricks.size()) == (t - 1) * (t - 1));
            for (int v = 0; v < wall.graph.vertex_count(); ++v) {
                CHECK(wall.graph.degree(v) >= 2);
                CHECK(wall.graph.degree(v) <= 3);
            }
            for (const auto & b : wall.bricks) {
                CHECK(b.length() == 6);
            }
            CHECK(f2_sum(wall.graph, std::span<const Cycle>(wall.bricks)) == wall.outer.edges());
            CHECK(wall.outer.length() == 8 * t - 10);
            CHECK((wall.outer.length() >= 6 * t) == (t >= 5));
        }
        auto w2 = make_wall(2);
        CHECK(w2.outer.edges() == EdgeSet::full(w2.graph));
        CHECK_THROWS_AS((void)make_wall(1), std::invalid_argument);
    }

    TEST_CASE("wall coordinates follow the parity rule")
    {
        auto wall = make_wall(4);
        for (const auto & e : wall.graph.edges()) {
            auto [i1, j1] = wall.coordinates[static_cast<std::size_t>(e.u)];
            auto [i2, j2] = wall.coordinates[static_cast<std::size_t>(e.v)];
            if (j1 == j2) {
                CHECK(std::abs(i1 - i2) == 1);
            }
            else {
                CHECK(i1 == i2);
                CHECK(std::min(j1, j2) % 2 != i1 % 2);
            }
        }
    }

    TEST_CASE("generators are deterministic")
    {
        CHECK(make_grid(6).graph == make_grid(6).graph);
        CHECK(make_wheel(7).graph == make_wheel(7).graph);
        CHECK(make_wall(4).graph == make_wall(4).graph);
        CHECK(make_wall(4).outer == make_wall(4).outer);
    }

    TEST_CASE("intro lengths")
    {
        auto grid = make_grid(3);
        auto l = intro_grid_lengths(grid);
        CHECK(cycle_length(l, grid.faces[0]) == Rational(6));
        CHECK(cycle_length(l, grid.outer) == Rational(8));
        for (int n = 2; n <= 8; ++n) {
            auto gr = make_grid(n);
            auto ln = intro_grid_lengths(gr);
            CHECK(is_geodesic_cycle(gr.graph, ln, gr.outer));
            for (const auto & f : gr.faces) {
                CHECK(cycle_length(ln, f) <= Rational(8));
            }
        }
    }

    TEST_CASE("subdivide_edges")
    {
        auto grid = make_grid(3);
        std::vector<std::int64_t> ones(static_cast<std::size_t>(grid.graph.edge_count()), 1);
        CHECK(subdivide_edges(grid.graph, ones).graph == grid.graph);

        auto tri = oracle::cycle_graph(3);
        std::vector<std::int64_t> twos{2, 2, 2};
        auto sub = subdivide_edges(tri, twos);
        CHECK(sub.graph.vertex_count() == 6);
        CHECK(sub.graph.edge_count() == 6);
        CHECK(as_cycle(sub.graph, EdgeSet::full(sub.graph)));

        std::mt19937 rng(3);
        std::uniform_int_distribution<std::int64_t> mult(1, 4);
        auto wall = make_wall(3);
        std::vector<std::int64_t> m;
        std::int64_t extra = 0;
        for (int e = 0; e < wall.graph.edge_count(); ++e) {
            m.push_back(mult(rng));
            extra += m.back() - 1;
        }
        sub = subdivide_edges(wall.graph, m);
        CHECK(sub.graph.vertex_count() == wall.graph.vertex_count() + extra);
        for (int e = 0; e < wall.graph.edge_count(); ++e) {
            const auto & path = sub.paths[static_cast<std::size_t>(e)];
            CHECK(static_cast<std::int64_t>(path.size()) == m[static_cast<std::size_t>(e)]);
            const auto & pv = sub.path_vertices[static_cast<std::size_t>(e)];
            CHECK(pv.front() == wall.graph.edge(e).u);
            CHECK(pv.back() == wall.graph.edge(e).v);
            for (int id : path) {
                CHECK(sub.branch[static_cast<std::size_t>(id)] == e);
            }
        }

        std::vector<std::int64_t> bad{1, 0, 1};
        CHECK_THROWS_AS((void)subdivide_edges(tri, bad), GraphError);
        std::vector<std::int64_t> short_list{1, 1};
        CHECK_THROWS_AS((void)subdivide_edges(tri, short_list), GraphError);
    }

    TEST_CASE("wall certificate premises")
    {
        for (int t = 2; t <= 4; ++t) {
            auto wc = wall_certificate(t);
            CHECK(is_geodesic_cycle(wc.graph, wc.lengths, wc.certificate.cycle));
            for (const auto & d : wc.certificate.generators) {
                CHECK(cycle_length(wc.lengths, d) <= Rational(1));
            }
            CHECK(cycle_length(wc.lengths, wc.certificate.cycle) == Rational(8 * t - 10, 18));
            CHECK_FALSE(wc.outer_length_claim_holds);
            auto result = verify_certificate(wc.graph, wc.lengths, wc.certificate);
            REQUIRE(result);
            CHECK(result.verified->k() == 0);
        }
        CHECK(wall_certificate(5).outer_length_claim_holds);
        CHECK(wall_certificate(6).outer_length_claim_holds);
    }

    TEST_CASE("wall certificate under random subdivision and extra host edges")
    {
        std::mt19937 rng(9);
        std::uniform_int_distribution<std::int64_t> mult(1, 3);
        for (int t = 2; t <= 4; ++t) {
            for (int round = 0; round < 3; ++round) {
                auto wall = make_wall(t);
                std::vector<std::int64_t> m;
                for (int e = 0; e < wall.graph.edge_count(); ++e) {
                    m.push_back(mult(rng));
                }
                WallHostExtras extras;
                extras.extra_vertices = 2;
                auto sub_vertices = subdivide_edges(wall.graph, m).graph.vertex_count();
                extras.extra_edges = {{0, sub_vertices}, {sub_vertices, sub_vertices + 1},
                                      {sub_vertices + 1, wall.outer.vertices()[3]}};
                auto wc = wall_certificate(t, m, extras);
                CHECK(wc.graph.vertex_count() == sub_vertices + 2);
                auto result = verify_certificate(wc.graph, wc.lengths, wc.certificate);
                CHECK(result);
                CHECK(oracle::geodesic(wc.graph, wc.lengths, wc.certificate.cycle) == static_cast<bool>(result));
            }
        }
    }

    TEST_CASE("outer cycle distances are within a factor 3 of wall distances")
    {
        for (int t = 2; t <= 4; ++t) {
            auto wall = make_wall(t);
            auto dist = oracle::unit_apsp(wall.graph);
            auto verts = wall.outer.vertices();
            for (int u : verts) {
                for (int v : verts) {
                    CHECK(wall.outer.arc_distance(u, v) <= 3 * dist[u][v]);
                }
            }
        }
    }
}
