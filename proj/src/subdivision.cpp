#include "twcert/subdivision.hpp"

#include <string>

namespace twcert {

SubdivisionMap subdivide_edges(const Graph & g, std::span<const std::int64_t> multiplicity)
{
    if (static_cast<int>(multiplicity.size()) != g.edge_count()) {
        throw GraphError("subdivision needs one multiplicity per edge");
    }
    SubdivisionMap map;
    map.original = g;
    int next_vertex = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto m = multiplicity[static_cast<std::size_t>(e)];
        if (m < 1) {
            throw GraphError("edge " + std::to_string(e) + " has multiplicity " + std::to_string(m));
        }
        std::vector<int> verts{g.edge(e).u};
        for (std::int64_t k = 1; k < m; ++k) {
            verts.push_back(next_vertex++);
        }
        verts.push_back(g.edge(e).v);
        std::vector<int> ids;
        for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
            ids.push_back(static_cast<int>(edges.size()));
            edges.emplace_back(verts[k], verts[k + 1]);
            map.branch.push_back(e);
        }
        map.paths.push_back(std::move(ids));
        map.path_vertices.push_back(std::move(verts));
    }
    map.graph = Graph(next_vertex, std::move(edges));
    return map;
}

EdgeSet SubdivisionMap::lift(const EdgeSet & s) const
{
    s.check_graph(original);
    EdgeSet out(graph);
    for (int e : s.members()) {
        for (int id : paths[static_cast<std::size_t>(e)]) {
            out.insert(id);
        }
    }
    return out;
}

Cycle SubdivisionMap::lift(const Cycle & c) const
{
    c.edges().check_graph(original);
    std::vector<int> seq;
    auto verts = c.vertices();
    auto order = c.edge_order();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const auto & path = path_vertices[static_cast<std::size_t>(order[i])];
        // path minus its last vertex, oriented away from verts[i]
        if (path.front() == verts[i]) {
            seq.insert(seq.end(), path.begin(), path.end() - 1);
        }
        else {
            seq.insert(seq.end(), path.rbegin(), path.rend() - 1);
        }
    }
    return Cycle::from_vertices(graph, seq);
}

} // namespace twcert
