#pragma once

#include "twcert/budget.hpp"
#include "twcert/graph.hpp"
#include "twcert/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace twcert {

/// Strictly positive exact length per edge of one graph.
class LengthFn {
public:
    LengthFn() = default;

    /// Throws GraphError when the value count differs from the edge count or
    /// a value is not positive.
    LengthFn(const Graph & g, std::vector<Rational> values);

    static LengthFn unit(const Graph & g);

    [[nodiscard]] const Rational & operator[](int edge) const { return values_[static_cast<std::size_t>(edge)]; }
    [[nodiscard]] std::span<const Rational> values() const { return values_; }
    [[nodiscard]] int size() const { return static_cast<int>(values_.size()); }
    [[nodiscard]] bool is_unit() const;

    [[nodiscard]] LengthFn scaled(const Rational & factor) const;

    void check_graph(const Graph & g) const;

    friend bool operator==(const LengthFn &, const LengthFn &) = default;

private:
    std::vector<Rational> values_;
    std::uint64_t fingerprint_ = 0;
};

/// Shortest-path length; nullopt means unreachable.
using Distance = std::optional<Rational>;

[[nodiscard]] std::vector<Distance> distances_from(const Graph & g, const LengthFn & l, int source);
[[nodiscard]] Distance distance(const Graph & g, const LengthFn & l, int u, int v);

[[nodiscard]] Rational subgraph_length(const LengthFn & l, const EdgeSet & s);
[[nodiscard]] inline Rational cycle_length(const LengthFn & l, const Cycle & c) { return subgraph_length(l, c.edges()); }

struct GeodesicWitness {
    int a;
    int b;
    Rational arc;      ///< shorter cycle arc between a and b
    Rational distance; ///< d(a, b) in the whole graph
};

struct GeodesicCheck {
    bool geodesic = true;
    std::optional<GeodesicWitness> witness;

    explicit operator bool() const { return geodesic; }
};

/// Compares the shorter arc with the graph distance for every pair of cycle
/// vertices; the witness is the first failing pair in cycle order.
[[nodiscard]] GeodesicCheck is_geodesic_cycle(const Graph & g, const LengthFn & l, const Cycle & c);

/// Every cycle of length at most bound, once each. A cycle is found from its
/// least edge id as the anchor, so the order is by anchor edge and then DFS
/// order over sorted adjacency. Throws BudgetExhausted past work_budget path
/// extensions.
[[nodiscard]] std::vector<Cycle> enumerate_cycles_up_to(const Graph & g, const LengthFn & l, const Rational & bound,
                                                        std::uint64_t work_budget = WorkBudget::default_limit);

struct AlgebraicWitness {
    Cycle first;
    Cycle second;
};

struct AlgebraicGeodesicCheck {
    bool geodesic = true;
    std::optional<AlgebraicWitness> witness;

    explicit operator bool() const { return geodesic; }
};

/// Geodecity via the cycle-space characterisation: c is geodesic iff it is
/// not the sum of two strictly shorter cycles.
[[nodiscard]] AlgebraicGeodesicCheck is_geodesic_algebraic(const Graph & g, const LengthFn & l, const Cycle & c,
                                                           std::uint64_t work_budget = WorkBudget::default_limit);

} // namespace twcert
