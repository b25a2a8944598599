#include "oracles.hpp"

#include "twcert/generators.hpp"
#include "twcert/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace twcert;

TEST_SUITE("graph-core")
{
    TEST_CASE("graph construction rejects loops, duplicates and bad ids")
    {
        CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
        CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
        CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
        CHECK_THROWS_AS(Graph(-1, {}), GraphError);

        Graph g(4, {{2, 1}, {0, 1}, {1, 3}});
        CHECK(g.edge_count() == 3);
        CHECK(g.find_edge(1, 2) == 0);
        CHECK(g.find_edge(2, 1) == 0);
        CHECK(g.find_edge(0, 2) == -1);
        CHECK(g.other_end(2, 3) == 1);
        CHECK(g.degree(1) == 3);
        auto nb = g.neighbours(1);
        CHECK(nb[0].vertex == 0);
        CHECK(nb[1].vertex == 2);
        CHECK(nb[2].vertex == 3);
    }

    TEST_CASE("f2_sum of a doubled set is empty")
    {
        auto k4 = oracle::complete(4);
        EdgeSet d(k4, {0, 1, 3});
        std::vector<EdgeSet> twice{d, d};
        CHECK(f2_sum(k4, std::span<const EdgeSet>(twice)).empty());
    }

    TEST_CASE("f2_sum of the 3x3 grid squares is the outer 8-cycle")
    {
        auto grid = make_grid(3);
        auto sum = f2_sum(grid.graph, std::span<const Cycle>(grid.faces));
        CHECK(sum == grid.outer.edges());
        CHECK(sum.count() == 8);
    }

    TEST_CASE("f2_sum of the wheel triangles is the rim")
    {
        auto w = make_wheel(5);
        CHECK(f2_sum(w.graph, std::span<const Cycle>(w.triangles)) == w.rim.edges());
    }

    TEST_CASE("f2_sum rejects sets of different graphs")
    {
        auto a = oracle::complete(4);
        auto b = oracle::cycle_graph(6);
        std::vector<EdgeSet> mixed{EdgeSet(a), EdgeSet(b)};
        CHECK_THROWS_AS((void)f2_sum(a, std::span<const EdgeSet>(mixed)), GraphError);
        EdgeSet x(a);
        CHECK_THROWS_AS(x ^= EdgeSet(b), GraphError);
    }

    TEST_CASE("f2_sum is associative, commutative and self-inverse on random sets")
    {
        std::mt19937 rng(7);
        auto g = oracle::complete(7);
        std::bernoulli_distribution coin(0.5);
        auto random_set = [&] {
            EdgeSet s(g);
            for (int e = 0; e < g.edge_count(); ++e) {
                if (coin(rng)) {
                    s.insert(e);
                }
            }
            return s;
        };
        for (int round = 0; round < 200; ++round) {
            auto a = random_set();
            auto b = random_set();
            auto c = random_set();
            CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
            CHECK((a ^ b) == (b ^ a));
            CHECK((a ^ a).empty());
            std::vector<EdgeSet> list{a, b, c};
            CHECK(f2_sum(g, std::span<const EdgeSet>(list)) == (a ^ b ^ c));
            for (int e = 0; e < g.edge_count(); ++e) {
                bool odd = (a.contains(e) + b.contains(e) + c.contains(e)) % 2 == 1;
                CHECK((a ^ b ^ c).contains(e) == odd);
            }
        }
    }

    TEST_CASE("as_cycle accepts a triangle of K4")
    {
        auto k4 = oracle::complete(4);
        EdgeSet tri(k4, {k4.find_edge(0, 1), k4.find_edge(1, 2), k4.find_edge(0, 2)});
        auto check = as_cycle(k4, tri);
        REQUIRE(check);
        CHECK(check.cycle->length() == 3);
        CHECK(check.defect == CycleDefect::none);
        std::vector<int> order(check.cycle->vertices().begin(), check.cycle->vertices().end());
        CHECK(order == std::vector<int>{0, 1, 2});
    }

    TEST_CASE("as_cycle rejections")
    {
        Graph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
        auto check = as_cycle(two, EdgeSet::full(two));
        CHECK_FALSE(check);
        CHECK(check.defect == CycleDefect::disconnected);

        auto path = oracle::path_graph(4);
        check = as_cycle(path, EdgeSet::full(path));
        CHECK_FALSE(check);
        CHECK(check.defect == CycleDefect::bad_degree);
        CHECK((check.vertex == 0 || check.vertex == 3));

        check = as_cycle(path, EdgeSet(path));
        CHECK(check.defect == CycleDefect::empty);

        auto k4 = oracle::complete(4);
        check = as_cycle(k4, EdgeSet::full(k4));
        CHECK(check.defect == CycleDefect::bad_degree);
        CHECK(std::string(to_string(CycleDefect::disconnected)) == "disconnected");
    }

    TEST_CASE("as_cycle agrees with brute-force cycle enumeration")
    {
        for (const auto & g : oracle::corpus(7, 30, 11)) {
            auto cycles = oracle::all_cycles(g);
            std::set<std::vector<int>> cycle_sets;
            for (const auto & c : cycles) {
                cycle_sets.insert(c.members());
                auto check = as_cycle(g, c);
                REQUIRE(check);
                CHECK(check.cycle->length() == c.count());
                CHECK(check.cycle->edges() == c);
                auto order = check.cycle->edge_order();
                CHECK(EdgeSet(g, order) == c);
            }
            if (g.edge_count() <= 12) {
                for (std::uint32_t mask = 1; mask < (1U << g.edge_count()); ++mask) {
                    EdgeSet s(g);
                    for (int e = 0; e < g.edge_count(); ++e) {
                        if ((mask >> e) & 1U) {
                            s.insert(e);
                        }
                    }
                    CHECK(static_cast<bool>(as_cycle(g, s)) == cycle_sets.contains(s.members()));
                }
            }
        }
    }

    TEST_CASE("Cycle::from_vertices validates the walk")
    {
        auto k4 = oracle::complete(4);
        std::vector<int> ok{3, 1, 2};
        auto c = Cycle::from_vertices(k4, ok);
        CHECK(c.position(1) == 1);
        CHECK(c.position(0) == -1);
        CHECK(c.contains(2));
        std::vector<int> repeat{0, 1, 0};
        CHECK_THROWS_AS(Cycle::from_vertices(k4, repeat), GraphError);
        std::vector<int> short_walk{0, 1};
        CHECK_THROWS_AS(Cycle::from_vertices(k4, short_walk), GraphError);
        auto c8 = oracle::cycle_graph(8);
        std::vector<int> missing{0, 1, 2};
        CHECK_THROWS_AS(Cycle::from_vertices(c8, missing), GraphError);
        std::vector<int> all{0, 1, 2, 3, 4, 5, 6, 7};
        auto whole = Cycle::from_vertices(c8, all);
        CHECK(whole.arc_distance(0, 5) == 3);
        CHECK(whole.arc_distance(2, 6) == 4);
        CHECK(whole.arc_distance(3, 3) == 0);
    }

    TEST_CASE("decompose_in_span on worked examples")
    {
        auto grid = make_grid(3);
        std::vector<EdgeSet> faces;
        for (const auto & f : grid.faces) {
            faces.push_back(f.edges());
        }
        auto s = decompose_in_span(grid.graph, grid.outer.edges(), faces);
        REQUIRE(s);
        CHECK(*s == std::vector<std::size_t>{0, 1, 2, 3});

        auto empty = decompose_in_span(grid.graph, EdgeSet(grid.graph), faces);
        REQUIRE(empty);
        CHECK(empty->empty());

        auto c8 = oracle::cycle_graph(8);
        CHECK_FALSE(decompose_in_span(c8, EdgeSet::full(c8), {}));
    }

    TEST_CASE("decompose_in_span matches subset enumeration on random generators")
    {
        std::mt19937 rng(2024);
        for (int round = 0; round < 60; ++round) {
            auto g = oracle::random_connected(rng, 7, 0.4);
            auto cycles = oracle::all_cycles(g);
            if (cycles.empty()) {
                continue;
            }
            std::shuffle(cycles.begin(), cycles.end(), rng);
            cycles.resize(std::min<std::size_t>(cycles.size(), 6));
            std::vector<EdgeSet> gens(cycles.begin(), cycles.end() - 1);
            for (const auto & target : {cycles.back(), cycles.front() ^ cycles.back(), EdgeSet::full(g)}) {
                auto s = decompose_in_span(g, target, gens);
                CHECK(s.has_value() == oracle::in_span_brute(g, target, gens));
                if (s) {
                    EdgeSet sum(g);
                    for (auto i : *s) {
                        sum ^= gens[i];
                    }
                    CHECK(sum == target);
                    CHECK(std::is_sorted(s->begin(), s->end()));
                }
            }
        }
    }

    TEST_CASE("Gf2Span tracks rank and combinations")
    {
        auto grid = make_grid(3);
        Gf2Span span(grid.graph);
        for (const auto & f : grid.faces) {
            CHECK(span.add(f.edges()));
        }
        CHECK_FALSE(span.add(grid.outer.edges()));
        CHECK(span.rank() == 4);
        CHECK(span.generator_count() == 5);
        auto combo = span.express(grid.outer.edges());
        REQUIRE(combo);
        EdgeSet sum(grid.graph);
        for (auto i : *combo) {
            sum ^= i < 4 ? grid.faces[i].edges() : grid.outer.edges();
        }
        CHECK(sum == grid.outer.edges());
        EdgeSet single(grid.graph, {0});
        CHECK_FALSE(span.contains(single));
    }

    TEST_CASE("components on worked examples")
    {
        auto grid = make_grid(3);
        VertexSet centre(grid.graph, {grid.vertex(2, 2)});
        auto comps = components(grid.graph, centre);
        REQUIRE(comps.size() == 1);
        CHECK(comps[0].count() == 8);

        auto path = oracle::path_graph(3);
        comps = components(path, VertexSet(path, {1}));
        REQUIRE(comps.size() == 2);
        CHECK(comps[0].members() == std::vector<int>{0});
        CHECK(comps[1].members() == std::vector<int>{2});

        CHECK(components(path, VertexSet::full(path)).empty());
    }

    TEST_CASE("components form a partition and match flood fill")
    {
        std::mt19937 rng(99);
        for (int round = 0; round < 100; ++round) {
            auto g = oracle::random_connected(rng, 9, 0.15);
            VertexSet removed(g);
            std::vector<bool> flags(9, false);
            std::bernoulli_distribution coin(0.3);
            for (int v = 0; v < 9; ++v) {
                if (coin(rng)) {
                    removed.insert(v);
                    flags[static_cast<std::size_t>(v)] = true;
                }
            }
            auto comps = components(g, removed);
            auto expected = oracle::components(g, flags);
            REQUIRE(comps.size() == expected.size());
            VertexSet all(g);
            for (std::size_t i = 0; i < comps.size(); ++i) {
                CHECK(comps[i].members() == expected[i]);
                CHECK_FALSE(comps[i].intersects(all));
                all |= comps[i];
            }
            CHECK((all | removed) == VertexSet::full(g));
            auto labels = component_labels(g, removed);
            for (const auto & e : g.edges()) {
                if (!removed.contains(e.u) && !removed.contains(e.v)) {
                    CHECK(labels[static_cast<std::size_t>(e.u)] == labels[static_cast<std::size_t>(e.v)]);
                }
            }
        }
    }

    TEST_CASE("IndexSet basics")
    {
        auto g = oracle::path_graph(70);
        VertexSet s(g, {0, 64, 69});
        CHECK(s.count() == 3);
        CHECK(s.lowest() == 0);
        s.erase(0);
        CHECK(s.lowest() == 64);
        s.flip(5);
        CHECK(s.members() == std::vector<int>{5, 64, 69});
        CHECK(VertexSet(g).lowest() == -1);
        CHECK(VertexSet(g, {5}).is_subset_of(s));
        CHECK_THROWS_AS((void)s.contains(70), GraphError);
        CHECK((s - VertexSet(g, {5})).members() == std::vector<int>{64, 69});
        CHECK((s & VertexSet(g, {5, 6})).members() == std::vector<int>{5});
    }

    TEST_CASE("bfs distances")
    {
        Graph g(5, {{0, 1}, {1, 2}, {2, 3}});
        auto d = bfs_distances(g, 0);
        CHECK(d == std::vector<int>{0, 1, 2, 3, -1});
    }
}
