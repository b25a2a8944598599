#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace twcert {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u;
    int v;
};

struct Incidence {
    int vertex;
    int edge;
};

/// Simple undirected graph. Vertex ids are 0..n-1, edge ids are the positions
/// in the construction list. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on out-of-range endpoints, loops or parallel edges.
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const Edge & edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }
    [[nodiscard]] std::span<const Edge> edges() const { return edges_; }

    /// Incident edges of v, sorted by neighbour id.
    [[nodiscard]] std::span<const Incidence> neighbours(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    [[nodiscard]] int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    /// Edge id joining u and v, or -1.
    [[nodiscard]] int find_edge(int u, int v) const;
    [[nodiscard]] int other_end(int edge_id, int v) const;

    /// Structural hash of (n, edge list); sets built over equal graphs are
    /// interchangeable.
    [[nodiscard]] std::uint64_t fingerprint() const { return fingerprint_; }

    [[nodiscard]] bool is_vertex(int v) const { return v >= 0 && v < vertex_count_; }

    friend bool operator==(const Graph & a, const Graph & b)
    {
        return a.vertex_count_ == b.vertex_count_ && a.edge_pairs() == b.edge_pairs();
    }

    [[nodiscard]] std::vector<std::pair<int, int>> edge_pairs() const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::uint64_t fingerprint_ = 0;
};

struct EdgeTag;
struct VertexTag;

/// Bit vector indexed by the edges (EdgeSet) or vertices (VertexSet) of a
/// fixed graph. Combining sets of different graphs throws GraphError.
template <typename Tag>
class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(const Graph & g) :
        size_(universe_size(g)),
        fingerprint_(g.fingerprint()),
        words_((static_cast<std::size_t>(size_) + 63) / 64, 0)
    {
    }

    IndexSet(const Graph & g, std::span<const int> members) : IndexSet(g)
    {
        for (int i : members) {
            insert(i);
        }
    }

    IndexSet(const Graph & g, std::initializer_list<int> members) :
        IndexSet(g, std::span<const int>(members.begin(), members.size()))
    {
    }

    static IndexSet full(const Graph & g)
    {
        IndexSet s(g);
        for (int i = 0; i < s.size_; ++i) {
            s.insert(i);
        }
        return s;
    }

    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] std::uint64_t fingerprint() const { return fingerprint_; }

    [[nodiscard]] bool contains(int i) const
    {
        check_index(i);
        return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U;
    }
    void insert(int i)
    {
        check_index(i);
        words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
    }
    void erase(int i)
    {
        check_index(i);
        words_[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
    void flip(int i)
    {
        check_index(i);
        words_[static_cast<std::size_t>(i) / 64] ^= std::uint64_t{1} << (i % 64);
    }

    [[nodiscard]] int count() const
    {
        int c = 0;
        for (auto w : words_) {
            c += std::popcount(w);
        }
        return c;
    }
    [[nodiscard]] bool empty() const
    {
        for (auto w : words_) {
            if (w != 0) {
                return false;
            }
        }
        return true;
    }

    /// Lowest member, or -1 when empty.
    [[nodiscard]] int lowest() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] != 0) {
                return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
            }
        }
        return -1;
    }

    [[nodiscard]] std::vector<int> members() const
    {
        std::vector<int> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w != 0) {
                out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    [[nodiscard]] bool intersects(const IndexSet & o) const
    {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & o.words_[k]) != 0) {
                return true;
            }
        }
        return false;
    }
    [[nodiscard]] bool is_subset_of(const IndexSet & o) const
    {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if ((words_[k] & ~o.words_[k]) != 0) {
                return false;
            }
        }
        return true;
    }

    IndexSet & operator^=(const IndexSet & o) { return combine(o, [](auto a, auto b) { return a ^ b; }); }
    IndexSet & operator|=(const IndexSet & o) { return combine(o, [](auto a, auto b) { return a | b; }); }
    IndexSet & operator&=(const IndexSet & o) { return combine(o, [](auto a, auto b) { return a & b; }); }
    IndexSet & operator-=(const IndexSet & o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

    friend IndexSet operator^(IndexSet a, const IndexSet & b) { return a ^= b; }
    friend IndexSet operator|(IndexSet a, const IndexSet & b) { return a |= b; }
    friend IndexSet operator&(IndexSet a, const IndexSet & b) { return a &= b; }
    friend IndexSet operator-(IndexSet a, const IndexSet & b) { return a -= b; }

    friend bool operator==(const IndexSet &, const IndexSet &) = default;
    friend auto operator<=>(const IndexSet & a, const IndexSet & b) { return a.members() <=> b.members(); }

    void check_same(const IndexSet & o) const
    {
        if (o.fingerprint_ != fingerprint_ || o.size_ != size_) {
            throw GraphError("sets belong to different graphs");
        }
    }
    void check_graph(const Graph & g) const
    {
        if (g.fingerprint() != fingerprint_ || universe_size(g) != size_) {
            throw GraphError("set does not belong to this graph");
        }
    }

private:
    static int universe_size(const Graph & g)
    {
        if constexpr (std::is_same_v<Tag, EdgeTag>) {
            return g.edge_count();
        }
        else {
            return g.vertex_count();
        }
    }

    void check_index(int i) const
    {
        if (i < 0 || i >= size_) {
            throw GraphError("index " + std::to_string(i) + " out of range");
        }
    }

    template <typename Op>
    IndexSet & combine(const IndexSet & o, Op op)
    {
        check_same(o);
        for (std::size_t k = 0; k < words_.size(); ++k) {
            words_[k] = op(words_[k], o.words_[k]);
        }
        return *this;
    }

    int size_ = 0;
    std::uint64_t fingerprint_ = 0;
    std::vector<std::uint64_t> words_;
};

using EdgeSet = IndexSet<EdgeTag>;
using VertexSet = IndexSet<VertexTag>;

/// A cycle of a graph: its edge set together with a cyclic vertex order.
/// Edge edge_order()[i] joins vertices()[i] and vertices()[i+1 mod length].
class Cycle {
public:
    /// Builds the cycle v0 v1 ... v(L-1) v0. Throws GraphError unless the
    /// sequence has at least three distinct vertices joined by edges of g.
    static Cycle from_vertices(const Graph & g, std::span<const int> sequence);

    [[nodiscard]] const EdgeSet & edges() const { return edges_; }
    [[nodiscard]] std::span<const int> vertices() const { return vertices_; }
    [[nodiscard]] std::span<const int> edge_order() const { return edge_order_; }
    [[nodiscard]] int length() const { return static_cast<int>(vertices_.size()); }

    /// Index of v in vertices(), or -1.
    [[nodiscard]] int position(int v) const
    {
        return v >= 0 && static_cast<std::size_t>(v) < position_.size() ? position_[static_cast<std::size_t>(v)] : -1;
    }
    [[nodiscard]] bool contains(int v) const { return position(v) >= 0; }
    [[nodiscard]] const VertexSet & vertex_set() const { return vertex_set_; }

    /// Number of cycle edges on the shorter of the two arcs between positions.
    [[nodiscard]] int arc_distance(int v, int w) const;

    friend bool operator==(const Cycle & a, const Cycle & b) { return a.edges_ == b.edges_; }

private:
    Cycle() = default;

    EdgeSet edges_;
    VertexSet vertex_set_;
    std::vector<int> vertices_;
    std::vector<int> edge_order_;
    std::vector<int> position_;
};

enum class CycleDefect { none, empty, bad_degree, disconnected };

struct CycleCheck {
    std::optional<Cycle> cycle;
    CycleDefect defect = CycleDefect::none;
    /// Offending vertex for bad_degree, otherwise -1.
    int vertex = -1;

    explicit operator bool() const { return cycle.has_value(); }
};

[[nodiscard]] const char * to_string(CycleDefect d);

/// Cycle view of s if s is nonempty, connected and 2-regular on its support.
/// The vertex order starts at the least vertex and continues towards its
/// smaller cycle neighbour.
[[nodiscard]] CycleCheck as_cycle(const Graph & g, const EdgeSet & s);

[[nodiscard]] EdgeSet f2_sum(const Graph & g, std::span<const EdgeSet> sets);
[[nodiscard]] EdgeSet f2_sum(const Graph & g, std::span<const Cycle> cycles);

/// Incremental GF(2) row reduction over edge-indexed vectors. Pivots are the
/// lowest set bit of each reduced row; every stored row remembers which
/// inserted vectors it is the sum of.
class Gf2Span {
public:
    explicit Gf2Span(const Graph & g);

    /// Appends a generator (index = number of previous calls). Returns whether
    /// it enlarged the span.
    bool add(const EdgeSet & v);

    /// Indices of inserted generators summing to target, or nullopt.
    [[nodiscard]] std::optional<std::vector<std::size_t>> express(const EdgeSet & target) const;
    [[nodiscard]] bool contains(const EdgeSet & target) const { return express(target).has_value(); }

    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] std::size_t generator_count() const { return generators_; }

private:
    struct Row {
        EdgeSet vector;
        std::vector<std::uint64_t> combination;
    };

    EdgeSet universe_;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
    std::size_t generators_ = 0;
};

/// Indices S (ascending) with sum of generators[S] = target, or nullopt when
/// target is outside their span. The answer is re-summed before returning.
[[nodiscard]] std::optional<std::vector<std::size_t>> decompose_in_span(const Graph & g, const EdgeSet & target,
                                                                        std::span<const EdgeSet> generators);

/// Connected components of g - removed, each as a vertex set, ordered by
/// least member.
[[nodiscard]] std::vector<VertexSet> components(const Graph & g, const VertexSet & removed);

/// Component index per vertex (-1 for removed vertices); indices match
/// components().
[[nodiscard]] std::vector<int> component_labels(const Graph & g, const VertexSet & removed);

/// Unit-length distances from source; -1 for unreachable vertices.
[[nodiscard]] std::vector<int> bfs_distances(const Graph & g, int source);

} // namespace twcert
