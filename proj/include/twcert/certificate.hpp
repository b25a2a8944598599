#pragma once

#include "twcert/budget.hpp"
#include "twcert/graph.hpp"
#include "twcert/metric.hpp"
#include "twcert/rational.hpp"
#include "twcert/subdivision.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twcert {

/// Which lower-bound theorem a certificate targets.
///  - rational_geodesic: l-geodesic C, sum of cycles of l-length <= r,
///    k = floor(l(C) / 2r).
///  - unit_precise: unit lengths, cycles of <= p edges,
///    k = floor(|C| / (4 floor(p/2))).
///  - cyclespace: unit lengths, the whole cycle space generated by cycles of
///    <= p edges, k = floor(|C| / p).
enum class Flavor { rational_geodesic, unit_precise, cyclespace };

[[nodiscard]] const char * to_string(Flavor f);
/// Throws std::invalid_argument on an unknown name.
[[nodiscard]] Flavor flavor_from_string(std::string_view name);

struct Certificate {
    Flavor flavor;
    Cycle cycle;
    std::vector<Cycle> generators;
    Rational bound;
};

/// Premises in canonical report order.
enum class Premise { sum, generator_length, generation, geodesic };

[[nodiscard]] const char * to_string(Premise p);

struct Violation {
    Premise premise;
    std::string message;
    /// Sum residue, or the basis element outside the short-cycle span.
    std::optional<EdgeSet> residue;
    std::optional<std::size_t> generator;
    std::optional<Rational> generator_length;
    std::optional<GeodesicWitness> geodesic;
};

class VerifiedCertificate {
public:
    [[nodiscard]] const Certificate & certificate() const { return certificate_; }
    [[nodiscard]] const Rational & cycle_length() const { return cycle_length_; }
    [[nodiscard]] const Rational & max_generator_length() const { return max_generator_length_; }
    [[nodiscard]] std::int64_t k() const { return k_; }

private:
    VerifiedCertificate(Certificate c, Rational cycle_length, Rational max_gen, std::int64_t k) :
        certificate_(std::move(c)), cycle_length_(cycle_length), max_generator_length_(max_gen), k_(k)
    {
    }

    friend struct CertificateChecks;

    Certificate certificate_;
    Rational cycle_length_;
    Rational max_generator_length_;
    std::int64_t k_;
};

struct VerificationResult {
    std::optional<VerifiedCertificate> verified;
    std::vector<Violation> violations;

    explicit operator bool() const { return verified.has_value(); }
};

/// Checks the sum, every generator length against r, and l-geodecity of the
/// cycle. All three run; violations come back sorted by premise. Generators
/// occurring an even number of times cancel before any check.
/// Throws std::invalid_argument unless the flavor is rational_geodesic.
[[nodiscard]] VerificationResult verify_certificate(const Graph & g, const LengthFn & l, const Certificate & cert);

/// Unit-length flavor; p = bound must be a positive integer.
[[nodiscard]] VerificationResult lower_bound_unit(const Graph & g, const Certificate & cert);

/// Whole-cycle-space flavor: every fundamental cycle of a BFS spanning forest
/// must lie in the span of the cycles with at most p edges, and c must be
/// geodesic. Throws BudgetExhausted from the short-cycle enumeration.
[[nodiscard]] VerificationResult verify_cyclespace_certificate(const Graph & g, const Cycle & c, std::int64_t p,
                                                               std::uint64_t work_budget = WorkBudget::default_limit);

/// Dispatches on cert.flavor. Unit flavors ignore l but reject a non-unit l
/// with std::invalid_argument.
[[nodiscard]] VerificationResult verify_any(const Graph & g, const LengthFn & l, const Certificate & cert,
                                            std::uint64_t work_budget = WorkBudget::default_limit);

/// Least positive M with M*r and every M*l(e) integral.
[[nodiscard]] std::int64_t scale_factor(const LengthFn & l, const Rational & r);

/// Subdivision with edge e replaced by a path of M*l(e) edges.
/// Throws GraphError if some M*l(e) is not a positive integer.
[[nodiscard]] SubdivisionMap subdivide(const Graph & g, const LengthFn & l, std::int64_t scale);

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge in
/// edge-id order.
[[nodiscard]] std::vector<Cycle> fundamental_cycles(const Graph & g);

/// Best-effort search for a rational-geodesic certificate with bound r:
/// among the l-geodesic cycles in the span of the cycles of length <= r,
/// returns the longest (first found on ties) with its decomposition.
/// Candidates longer than 2*diameter + 2*max edge length cannot be geodesic
/// and are not enumerated.
[[nodiscard]] std::optional<Certificate> search_certificate(const Graph & g, const LengthFn & l, const Rational & r,
                                                            std::uint64_t work_budget = WorkBudget::default_limit);

} // namespace twcert
