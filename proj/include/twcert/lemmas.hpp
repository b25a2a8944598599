#pragma once

#include "twcert/budget.hpp"
#include "twcert/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace twcert {

/// A precondition of a lemma does not hold for the given input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A lemma's conclusion failed on an input satisfying its hypotheses.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class OracleLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Everything in this header measures distance by edge count.

/// Largest j with |{z in Y : dist(y, z) <= j*d}| >= 1 + j.
[[nodiscard]] int range(const Graph & g, const VertexSet & Y, int y, int d);

/// One round of the separator extension: the chosen centre, its range, the
/// ball removed from the remaining set, and the cycle arc added to it.
struct SeparatorStep {
    int centre;
    int range;
    VertexSet ball;
    VertexSet arc;
    /// The remaining set X_k the centre was chosen from.
    VertexSet remaining;
};

/// Pairwise disjoint, pairwise more than d apart, each meeting the cycle in
/// an arc (or not at all).
struct RFamily {
    std::vector<VertexSet> parts;
    int d = 1;
    std::vector<SeparatorStep> steps;
};

/// Grows X into an RFamily around the geodesic cycle c. Repeatedly takes the
/// cycle vertex of maximum range in what is left of X (least id on ties),
/// removes its ball and adds the ball plus the two trimmed cycle arcs through
/// it as a part. Leftover vertices off the cycle become one last part.
[[nodiscard]] RFamily extend_separator(const Graph & g, const Cycle & c, const VertexSet & X, int d);

/// Names of the guarantees the family breaks, empty if none: "disjoint",
/// "nonempty", "covers-x", "inside-x-and-cycle", "cycle-budget",
/// "arc-connected", "separated".
[[nodiscard]] std::vector<std::string> rfamily_violations(const Graph & g, const Cycle & c, const VertexSet & X,
                                                          const RFamily & fam);

/// Whether s meets c in nothing, all of V(c), or a single arc.
[[nodiscard]] bool is_cycle_arc(const Cycle & c, const VertexSet & s);

/// Unit distance between two vertex sets, -1 if no path joins them.
[[nodiscard]] int set_distance(const Graph & g, const VertexSet & a, const VertexSet & b);

struct DichotomyWitness {
    std::size_t generator;
    std::size_t part;
    std::size_t other_part;
};

struct Absorbed {
    /// Component of G minus the parts containing every uncovered cycle
    /// vertex. Empty only when the parts cover V(G).
    VertexSet component;
};

using Dichotomy = std::variant<DichotomyWitness, Absorbed>;

/// Either a generator touching two parts, or the component swallowing the
/// rest of the cycle. Throws PreconditionError if the generators do not sum
/// to c or the parts are not disjoint arcs, InternalInvariantError if neither
/// outcome exists.
[[nodiscard]] Dichotomy absorb_component(const Graph & g, const Cycle & c, std::span<const Cycle> generators,
                                         std::span<const VertexSet> parts);

struct ParityFailure {
    std::size_t component;
    std::size_t part;
    int crossing_edges;
};

/// Pairs (component of G minus the parts, part) joined by an odd number of
/// cycle edges.
[[nodiscard]] std::vector<ParityFailure> parity_failures(const Graph & g, const Cycle & c,
                                                         std::span<const VertexSet> parts);

struct PreciseCheck {
    bool pass = true;
    std::optional<VertexSet> counterexample;
    /// Whether sum, generator size, geodecity and |C| >= 4 floor(p/2) k held.
    bool premises_hold = false;
    std::uint64_t subsets_checked = 0;
};

/// Tries every X with |X| <= k (by size, then colexicographic) and checks that
/// some component of G - X holds at least half of V(c).
[[nodiscard]] PreciseCheck check_precise_theorem(const Graph & g, const Cycle & c, std::span<const Cycle> generators,
                                                 int p, int k, std::uint64_t work_budget = WorkBudget::default_limit);

/// Whether every component of G - X holds at most |A \ X| / 2 vertices of A.
[[nodiscard]] bool is_balanced_separator(const Graph & g, const VertexSet & A, const VertexSet & X);

/// Lexicographically least X with |X| <= k that is a balanced separator for A.
[[nodiscard]] std::optional<VertexSet> balanced_separator(const Graph & g, const VertexSet & A, int k,
                                                          std::uint64_t work_budget = WorkBudget::default_limit);

inline constexpr int default_oracle_limit = 12;

/// Branch and bound over elimination orderings.
[[nodiscard]] int treewidth_by_elimination(const Graph & g);
/// Dynamic programme over vertex subsets.
[[nodiscard]] int treewidth_by_subsets(const Graph & g);

/// Runs both solvers and throws InternalInvariantError if they disagree.
/// Throws OracleLimitExceeded above vertex_limit vertices (hard cap 24).
/// The empty graph has tree-width 0 here.
[[nodiscard]] int exact_treewidth(const Graph & g, int vertex_limit = default_oracle_limit);

} // namespace twcert
