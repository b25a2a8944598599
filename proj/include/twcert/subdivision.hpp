#pragma once

#include "twcert/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace twcert {

/// A subdivision of `original`: edge e becomes a path of paths[e].size()
/// edges. Original vertices keep their ids; the inner vertices of each path
/// follow in edge order.
struct SubdivisionMap {
    Graph original;
    Graph graph;
    /// New edge ids along the path replacing each original edge, from its u end.
    std::vector<std::vector<int>> paths;
    /// Vertices along each path including both ends.
    std::vector<std::vector<int>> path_vertices;
    /// Common scale factor when built from a length function, 1 otherwise.
    std::int64_t scale = 1;
    /// Original edge owning each new edge.
    std::vector<int> branch;

    [[nodiscard]] EdgeSet lift(const EdgeSet & s) const;
    [[nodiscard]] Cycle lift(const Cycle & c) const;
};

/// Replaces every edge e by a path with multiplicity[e] >= 1 edges.
/// Throws GraphError on a short or non-positive multiplicity vector.
[[nodiscard]] SubdivisionMap subdivide_edges(const Graph & g, std::span<const std::int64_t> multiplicity);

} // namespace twcert
