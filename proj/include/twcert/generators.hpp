#pragma once

#include "twcert/certificate.hpp"
#include "twcert/graph.hpp"
#include "twcert/metric.hpp"
#include "twcert/subdivision.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace twcert {

/// n x n grid on the points (i, j), 1 <= i, j <= n, with vertex id
/// (i-1)*n + (j-1).
struct Grid {
    int n;
    Graph graph;
    Cycle outer;
    /// Unit squares in row-major order of their lower-left corner.
    std::vector<Cycle> faces;

    [[nodiscard]] int vertex(int i, int j) const { return (i - 1) * n + (j - 1); }
};

/// Rim v_0 .. v_(n-1) with ids 0..n-1 and the hub with id n. Rim edges come
/// first, then spokes.
struct Wheel {
    int n;
    Graph graph;
    int hub;
    Cycle rim;
    /// hub, v_i, v_(i+1) for i = 0..n-1.
    std::vector<Cycle> triangles;
};

/// Elementary wall built from the grid with columns i in [1, 2t] and rows
/// j in [1, t]: vertical edges (i,j)-(i,j+1) survive only when i and j have
/// different parity, and the two resulting degree-1 corners are removed.
struct Wall {
    int t;
    Graph graph;
    Cycle outer;
    /// 6-cycles bounding the inner faces, row by row from the bottom, left to
    /// right.
    std::vector<Cycle> bricks;
    /// (column, row) of each vertex id.
    std::vector<std::pair<int, int>> coordinates;
};

/// Throw std::invalid_argument below the minimum size.
[[nodiscard]] Grid make_grid(int n);
[[nodiscard]] Wheel make_wheel(int n);
[[nodiscard]] Wall make_wall(int t);

/// 1 on the outer cycle, 2 on every other edge.
[[nodiscard]] LengthFn intro_grid_lengths(const Grid & grid);

/// Host graph for wall_certificate beyond the subdivided wall itself:
/// extra vertices appended after the subdivision's vertices, and extra edges
/// among all vertices.
struct WallHostExtras {
    int extra_vertices = 0;
    std::vector<std::pair<int, int>> extra_edges;
};

struct WallCertificate {
    Wall wall;
    SubdivisionMap subdivision;
    Graph graph;
    LengthFn lengths;
    Certificate certificate;
    /// Whether l(C') >= t/3 after rescaling, i.e. |outer| >= 6t.
    bool outer_length_claim_holds;
};

/// Length function on a (subdivided) wall: a branch path of an outer-cycle
/// edge f gets 1/m(f) per edge, other branch paths 3/m(f) per edge, host
/// edges off the wall 10 t^3; everything is then scaled by 1/18. The
/// certificate is the subdivided outer cycle over the subdivided bricks with
/// r = 1. Throws InternalInvariantError if a brick ends up longer than 1.
/// An empty multiplicity means no subdivision.
[[nodiscard]] WallCertificate wall_certificate(int t, std::span<const std::int64_t> multiplicity = {},
                                               const WallHostExtras & extras = {});

} // namespace twcert
