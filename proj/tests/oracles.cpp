#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace oracle {

namespace {

std::vector<std::vector<int>> adjacency_matrix(const Graph & g)
{
    auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, -1));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = e;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = e;
    }
    return adj;
}

} // namespace

std::optional<Rational> path_distance(const Graph & g, const LengthFn & l, int u, int v)
{
    if (u == v) {
        return Rational(0);
    }
    auto adj = adjacency_matrix(g);
    const int n = g.vertex_count();
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::optional<Rational> best;
    std::function<void(int, Rational)> dfs = [&](int x, Rational sofar) {
        if (best && sofar >= *best) {
            return;
        }
        if (x == v) {
            best = sofar;
            return;
        }
        used[static_cast<std::size_t>(x)] = true;
        for (int y = 0; y < n; ++y) {
            int e = adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (e >= 0 && !used[static_cast<std::size_t>(y)]) {
                dfs(y, sofar + l[e]);
            }
        }
        used[static_cast<std::size_t>(x)] = false;
    };
    dfs(u, Rational(0));
    return best;
}

std::vector<EdgeSet> all_cycles(const Graph & g)
{
    auto adj = adjacency_matrix(g);
    const int n = g.vertex_count();
    std::set<std::vector<int>> seen;
    std::vector<EdgeSet> out;
    std::vector<int> path;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<void(int, int)> dfs = [&](int root, int x) {
        for (int y = root; y < n; ++y) {
            int e = adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (e < 0) {
                continue;
            }
            if (y == root && path.size() >= 3) {
                EdgeSet s(g);
                for (std::size_t i = 0; i < path.size(); ++i) {
                    int a = path[i];
                    int b = path[(i + 1) % path.size()];
                    s.insert(adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]);
                }
                if (seen.insert(s.members()).second) {
                    out.push_back(s);
                }
            }
            else if (y != root && !used[static_cast<std::size_t>(y)]) {
                used[static_cast<std::size_t>(y)] = true;
                path.push_back(y);
                dfs(root, y);
                path.pop_back();
                used[static_cast<std::size_t>(y)] = false;
            }
        }
    };
    for (int root = 0; root < n; ++root) {
        path = {root};
        used[static_cast<std::size_t>(root)] = true;
        dfs(root, root);
        used[static_cast<std::size_t>(root)] = false;
    }
    return out;
}

bool geodesic(const Graph & g, const LengthFn & l, const Cycle & c)
{
    auto vs = c.vertices();
    auto order = c.edge_order();
    const auto L = vs.size();
    Rational total(0);
    for (int e : order) {
        total = total + l[e];
    }
    for (std::size_t i = 0; i < L; ++i) {
        Rational arc(0);
        for (std::size_t j = i + 1; j < L; ++j) {
            arc = arc + l[order[j - 1]];
            Rational shorter = std::min(arc, total - arc);
            auto d = path_distance(g, l, vs[i], vs[j]);
            if (!d || *d != shorter) {
                return false;
            }
        }
    }
    return true;
}

bool in_span_brute(const Graph & g, const EdgeSet & target, const std::vector<EdgeSet> & gens)
{
    const auto n = gens.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        EdgeSet s(g);
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) {
                s ^= gens[i];
            }
        }
        if (s == target) {
            return true;
        }
    }
    return false;
}

int treewidth_by_permutations(const Graph & g)
{
    const int n = g.vertex_count();
    if (n == 0) {
        return 0;
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = n - 1;
    do {
        auto adj = adjacency_matrix(g);
        std::vector<bool> gone(static_cast<std::size_t>(n), false);
        int width = 0;
        for (int v : order) {
            std::vector<int> nb;
            for (int w = 0; w < n; ++w) {
                if (!gone[static_cast<std::size_t>(w)] && w != v && adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] >= 0) {
                    nb.push_back(w);
                }
            }
            width = std::max(width, static_cast<int>(nb.size()));
            if (width >= best) {
                break;
            }
            for (int a : nb) {
                for (int b : nb) {
                    if (a != b) {
                        adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 0;
                    }
                }
            }
            gone[static_cast<std::size_t>(v)] = true;
        }
        best = std::min(best, width);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

std::vector<std::vector<int>> components(const Graph & g, const std::vector<bool> & removed)
{
    auto adj = adjacency_matrix(g);
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (removed[static_cast<std::size_t>(s)] || label[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        int id = static_cast<int>(out.size());
        label[static_cast<std::size_t>(s)] = id;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < n; ++x) {
                if (label[static_cast<std::size_t>(x)] != id) {
                    continue;
                }
                for (int y = 0; y < n; ++y) {
                    if (adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] >= 0 && !removed[static_cast<std::size_t>(y)]
                        && label[static_cast<std::size_t>(y)] < 0) {
                        label[static_cast<std::size_t>(y)] = id;
                        changed = true;
                    }
                }
            }
        }
        std::vector<int> comp;
        for (int x = 0; x < n; ++x) {
            if (label[static_cast<std::size_t>(x)] == id) {
                comp.push_back(x);
            }
        }
        out.push_back(comp);
    }
    return out;
}

std::vector<std::vector<int>> unit_apsp(const Graph & g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    constexpr int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (std::size_t v = 0; v < n; ++v) {
        d[v][v] = 0;
    }
    for (const auto & e : g.edges()) {
        d[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
        d[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    for (auto & row : d) {
        for (auto & x : row) {
            if (x >= inf) {
                x = -1;
            }
        }
    }
    return d;
}

Graph random_connected(std::mt19937 & rng, int n, double p)
{
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.emplace(pick(rng), v);
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace(u, v);
            }
        }
    }
    std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
    std::shuffle(list.begin(), list.end(), rng);
    return Graph(n, std::move(list));
}

LengthFn random_lengths(std::mt19937 & rng, const Graph & g, int max_num, int max_den)
{
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<Rational> values;
    for (int e = 0; e < g.edge_count(); ++e) {
        values.emplace_back(num(rng), den(rng));
    }
    return {g, std::move(values)};
}

Graph complete(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(n, std::move(edges));
}

Graph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> corpus(int max_vertices, int random_count, std::uint32_t seed)
{
    std::vector<Graph> out;
    for (int n = 3; n <= max_vertices; ++n) {
        out.push_back(cycle_graph(n));
        out.push_back(complete(std::min(n, 7)));
        out.push_back(path_graph(n));
    }
    // K_{3,3} and the triangular prism
    out.push_back(Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}));
    out.push_back(Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> size(4, max_vertices);
    std::uniform_real_distribution<double> density(0.1, 0.6);
    for (int i = 0; i < random_count; ++i) {
        out.push_back(random_connected(rng, size(rng), density(rng)));
    }
    return out;
}

} // namespace oracle
