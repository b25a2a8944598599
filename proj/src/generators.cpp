#include "twcert/generators.hpp"

#include "twcert/lemmas.hpp"

#include <stdexcept>
#include <string>

namespace twcert {

Grid make_grid(int n)
{
    if (n < 2) {
        throw std::invalid_argument("grid side must be at least 2, got " + std::to_string(n));
    }
    auto id = [n](int i, int j) { return (i - 1) * n + (j - 1); };
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j < n) {
                edges.emplace_back(id(i, j), id(i, j + 1));
            }
            if (i < n) {
                edges.emplace_back(id(i, j), id(i + 1, j));
            }
        }
    }
    Graph g(n * n, std::move(edges));

    std::vector<int> boundary;
    for (int j = 1; j <= n; ++j) {
        boundary.push_back(id(1, j));
    }
    for (int i = 2; i <= n; ++i) {
        boundary.push_back(id(i, n));
    }
    for (int j = n - 1; j >= 1; --j) {
        boundary.push_back(id(n, j));
    }
    for (int i = n - 1; i >= 2; --i) {
        boundary.push_back(id(i, 1));
    }
    auto outer = Cycle::from_vertices(g, boundary);

    std::vector<Cycle> faces;
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            std::vector<int> sq{id(i, j), id(i, j + 1), id(i + 1, j + 1), id(i + 1, j)};
            faces.push_back(Cycle::from_vertices(g, sq));
        }
    }
    return Grid{n, std::move(g), std::move(outer), std::move(faces)};
}

Wheel make_wheel(int n)
{
    if (n < 3) {
        throw std::invalid_argument("wheel rim must have at least 3 vertices, got " + std::to_string(n));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
    }
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(n, i);
    }
    Graph g(n + 1, std::move(edges));
    std::vector<int> rim(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        rim[static_cast<std::size_t>(i)] = i;
    }
    auto rim_cycle = Cycle::from_vertices(g, rim);
    std::vector<Cycle> triangles;
    for (int i = 0; i < n; ++i) {
        std::vector<int> tri{n, i, (i + 1) % n};
        triangles.push_back(Cycle::from_vertices(g, tri));
    }
    return Wheel{n, std::move(g), n, std::move(rim_cycle), std::move(triangles)};
}

Wall make_wall(int t)
{
    if (t < 2) {
        throw std::invalid_argument("wall parameter must be at least 2, got " + std::to_string(t));
    }
    const int cols = 2 * t;
    const int rows = t;
    auto vertical = [](int i, int j) { return i % 2 != j % 2; }; // edge (i,j)-(i,j+1)
    auto grid_degree = [&](int i, int j) {
        int deg = (i > 1 ? 1 : 0) + (i < cols ? 1 : 0);
        deg += (j < rows && vertical(i, j)) ? 1 : 0;
        deg += (j > 1 && vertical(i, j - 1)) ? 1 : 0;
        return deg;
    };

    // index [j][i], -1 for the removed corners
    std::vector<std::vector<int>> id(static_cast<std::size_t>(rows + 1), std::vector<int>(static_cast<std::size_t>(cols + 1), -1));
    std::vector<std::pair<int, int>> coords;
    for (int j = 1; j <= rows; ++j) {
        for (int i = 1; i <= cols; ++i) {
            if (grid_degree(i, j) == 1) {
                continue;
            }
            id[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = static_cast<int>(coords.size());
            coords.emplace_back(i, j);
        }
    }
    auto at = [&](int i, int j) {
        if (i < 1 || i > cols || j < 1 || j > rows) {
            return -1;
        }
        return id[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    };

    std::vector<std::pair<int, int>> edges;
    for (const auto & [i, j] : coords) {
        int v = at(i, j);
        if (at(i + 1, j) >= 0) {
            edges.emplace_back(v, at(i + 1, j));
        }
        if (j < rows && vertical(i, j) && at(i, j + 1) >= 0) {
            edges.emplace_back(v, at(i, j + 1));
        }
    }
    Graph g(static_cast<int>(coords.size()), std::move(edges));

    auto leftmost = [&](int j) { return at(1, j) >= 0 ? 1 : 2; };
    auto rightmost = [&](int j) { return at(cols, j) >= 0 ? cols : cols - 1; };
    // extreme vertical edges between rows j and j+1
    auto right_rung = [&](int j) { return vertical(cols, j) ? cols : cols - 1; };
    auto left_rung = [&](int j) { return vertical(1, j) ? 1 : 2; };

    std::vector<int> boundary;
    auto push = [&](int v) {
        if (boundary.empty() || boundary.back() != v) {
            boundary.push_back(v);
        }
    };
    auto walk = [&](int j, int from, int to) {
        int step = from <= to ? 1 : -1;
        for (int i = from;; i += step) {
            push(at(i, j));
            if (i == to) {
                break;
            }
        }
    };

    int pos = leftmost(1);
    walk(1, pos, rightmost(1));
    pos = rightmost(1);
    for (int j = 1; j < rows; ++j) {
        walk(j, pos, right_rung(j));
        walk(j + 1, right_rung(j), rightmost(j + 1));
        pos = rightmost(j + 1);
    }
    walk(rows, pos, leftmost(rows));
    pos = leftmost(rows);
    for (int j = rows - 1; j >= 1; --j) {
        walk(j + 1, pos, left_rung(j));
        walk(j, left_rung(j), leftmost(j));
        pos = leftmost(j);
    }
    if (boundary.size() > 1 && boundary.back() == boundary.front()) {
        boundary.pop_back();
    }
    auto outer = Cycle::from_vertices(g, boundary);

    std::vector<Cycle> bricks;
    for (int j = 1; j < rows; ++j) {
        int first = vertical(1, j) ? 1 : 2;
        for (int a = first; a + 2 <= cols; a += 2) {
            int b = a + 2;
            std::vector<int> brick{at(a, j), at(a + 1, j), at(b, j), at(b, j + 1), at(a + 1, j + 1), at(a, j + 1)};
            bricks.push_back(Cycle::from_vertices(g, brick));
        }
    }
    return Wall{t, std::move(g), std::move(outer), std::move(bricks), std::move(coords)};
}

LengthFn intro_grid_lengths(const Grid & grid)
{
    std::vector<Rational> values;
    for (int e = 0; e < grid.graph.edge_count(); ++e) {
        values.emplace_back(grid.outer.edges().contains(e) ? 1 : 2);
    }
    return {grid.graph, std::move(values)};
}

WallCertificate wall_certificate(int t, std::span<const std::int64_t> multiplicity, const WallHostExtras & extras)
{
    Wall wall = make_wall(t);
    std::vector<std::int64_t> mult(multiplicity.begin(), multiplicity.end());
    if (mult.empty()) {
        mult.assign(static_cast<std::size_t>(wall.graph.edge_count()), 1);
    }
    auto sub = subdivide_edges(wall.graph, mult);

    auto host_edges = sub.graph.edge_pairs();
    const auto wall_edge_count = host_edges.size();
    host_edges.insert(host_edges.end(), extras.extra_edges.begin(), extras.extra_edges.end());
    Graph host(sub.graph.vertex_count() + extras.extra_vertices, std::move(host_edges));

    const Rational off_wall(std::int64_t{10} * t * t * t);
    const Rational rescale(1, 18);
    std::vector<Rational> values;
    for (int e = 0; e < host.edge_count(); ++e) {
        Rational value = off_wall;
        if (static_cast<std::size_t>(e) < wall_edge_count) {
            int f = sub.branch[static_cast<std::size_t>(e)];
            std::int64_t m = mult[static_cast<std::size_t>(f)];
            value = wall.outer.edges().contains(f) ? Rational(1, m) : Rational(3, m);
        }
        values.push_back(value * rescale);
    }
    LengthFn lengths(host, std::move(values));

    auto on_host = [&](const Cycle & c) {
        auto lifted = sub.lift(c);
        return Cycle::from_vertices(host, lifted.vertices());
    };
    Cycle outer = on_host(wall.outer);
    std::vector<Cycle> generators;
    for (const auto & brick : wall.bricks) {
        generators.push_back(on_host(brick));
        if (cycle_length(lengths, generators.back()) > Rational(1)) {
            throw InternalInvariantError("wall brick longer than 1 after rescaling");
        }
    }
    const bool claim = cycle_length(lengths, outer) >= Rational(t, 3);
    Certificate cert{Flavor::rational_geodesic, std::move(outer), std::move(generators), Rational(1)};
    return WallCertificate{std::move(wall), std::move(sub), std::move(host), std::move(lengths), std::move(cert), claim};
}

} // namespace twcert
