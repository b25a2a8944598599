#include "twcert/certificate.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace twcert {

const char * to_string(Flavor f)
{
    switch (f) {
    case Flavor::rational_geodesic: return "rational-geodesic";
    case Flavor::unit_precise: return "unit-precise";
    case Flavor::cyclespace: return "cyclespace";
    }
    return "unknown";
}

Flavor flavor_from_string(std::string_view name)
{
    for (auto f : {Flavor::rational_geodesic, Flavor::unit_precise, Flavor::cyclespace}) {
        if (name == to_string(f)) {
            return f;
        }
    }
    throw std::invalid_argument("unknown certificate flavor '" + std::string(name) + "'");
}

const char * to_string(Premise p)
{
    switch (p) {
    case Premise::sum: return "sum";
    case Premise::generator_length: return "generator-length";
    case Premise::generation: return "generation";
    case Premise::geodesic: return "geodesic";
    }
    return "unknown";
}

struct CertificateChecks {
    static VerifiedCertificate make(Certificate c, Rational cycle_length, Rational max_gen, std::int64_t k)
    {
        return {std::move(c), cycle_length, max_gen, k};
    }

    // Indices of generators surviving cancellation mod 2, in first-occurrence order.
    static std::vector<std::size_t> reduce_mod2(const std::vector<Cycle> & generators)
    {
        std::map<std::vector<int>, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < generators.size(); ++i) {
            groups[generators[i].edges().members()].push_back(i);
        }
        std::vector<std::size_t> kept;
        for (const auto & [key, idx] : groups) {
            if (idx.size() % 2 == 1) {
                kept.push_back(idx.front());
            }
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

    // Shared by the rational and unit flavors.
    static VerificationResult run(const Graph & g, const LengthFn & l, const Certificate & cert,
                                  const Rational & bound, auto && k_of)
    {
        l.check_graph(g);
        cert.cycle.edges().check_graph(g);
        for (const auto & d : cert.generators) {
            d.edges().check_graph(g);
        }

        VerificationResult result;
        auto kept = reduce_mod2(cert.generators);

        EdgeSet sum(g);
        for (auto i : kept) {
            sum ^= cert.generators[i].edges();
        }
        EdgeSet residue = sum ^ cert.cycle.edges();
        if (!residue.empty()) {
            result.violations.push_back({Premise::sum,
                                         "generators sum to the cycle plus " + std::to_string(residue.count())
                                             + " residual edge(s)",
                                         residue, std::nullopt, std::nullopt, std::nullopt});
        }

        Rational max_gen(0);
        for (auto i : kept) {
            Rational len = cycle_length(l, cert.generators[i]);
            max_gen = std::max(max_gen, len);
            if (len > bound) {
                result.violations.push_back({Premise::generator_length,
                                             "generator " + std::to_string(i) + " has length " + len.to_string()
                                                 + " > " + bound.to_string(),
                                             std::nullopt, i, len, std::nullopt});
            }
        }

        auto geo = is_geodesic_cycle(g, l, cert.cycle);
        if (!geo) {
            const auto & w = *geo.witness;
            result.violations.push_back({Premise::geodesic,
                                         "vertices " + std::to_string(w.a) + " and " + std::to_string(w.b)
                                             + " are at distance " + w.distance.to_string()
                                             + " but the shorter cycle arc has length " + w.arc.to_string(),
                                         std::nullopt, std::nullopt, std::nullopt, w});
        }

        if (result.violations.empty()) {
            Rational len = cycle_length(l, cert.cycle);
            result.verified = make(cert, len, max_gen, k_of(len));
        }
        return result;
    }
};

VerificationResult verify_certificate(const Graph & g, const LengthFn & l, const Certificate & cert)
{
    if (cert.flavor != Flavor::rational_geodesic) {
        throw std::invalid_argument("verify_certificate expects a rational-geodesic certificate");
    }
    if (!cert.bound.is_positive()) {
        throw std::invalid_argument("certificate bound must be positive");
    }
    const Rational r = cert.bound;
    return CertificateChecks::run(g, l, cert, r, [&](const Rational & len) { return (len / (r * 2)).floor(); });
}

VerificationResult lower_bound_unit(const Graph & g, const Certificate & cert)
{
    if (cert.flavor != Flavor::unit_precise) {
        throw std::invalid_argument("lower_bound_unit expects a unit-precise certificate");
    }
    if (!cert.bound.is_integer() || !cert.bound.is_positive()) {
        throw std::invalid_argument("unit-precise bound p must be a positive integer");
    }
    const std::int64_t half = cert.bound.num() / 2;
    return CertificateChecks::run(g, LengthFn::unit(g), cert, cert.bound, [&](const Rational & len) {
        return half == 0 ? std::int64_t{0} : len.floor() / (4 * half);
    });
}

std::vector<Cycle> fundamental_cycles(const Graph & g)
{
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> parent(n, -1);
    std::vector<int> parent_edge(n, -1);
    std::vector<int> depth(n, -1);
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (depth[static_cast<std::size_t>(root)] >= 0) {
            continue;
        }
        depth[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (const auto & inc : g.neighbours(v)) {
                auto w = static_cast<std::size_t>(inc.vertex);
                if (depth[w] < 0) {
                    depth[w] = depth[static_cast<std::size_t>(v)] + 1;
                    parent[w] = v;
                    parent_edge[w] = inc.edge;
                    queue.push_back(inc.vertex);
                }
            }
        }
    }

    std::vector<Cycle> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        int u = g.edge(e).u;
        int v = g.edge(e).v;
        if (parent_edge[static_cast<std::size_t>(u)] == e || parent_edge[static_cast<std::size_t>(v)] == e) {
            continue;
        }
        std::vector<int> up{u};
        std::vector<int> down{v};
        int a = u;
        int b = v;
        while (a != b) {
            if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
                a = parent[static_cast<std::size_t>(a)];
                up.push_back(a);
            }
            else {
                b = parent[static_cast<std::size_t>(b)];
                down.push_back(b);
            }
        }
        down.pop_back(); // the common ancestor is already the last entry of up
        up.insert(up.end(), down.rbegin(), down.rend());
        out.push_back(Cycle::from_vertices(g, up));
    }
    return out;
}

VerificationResult verify_cyclespace_certificate(const Graph & g, const Cycle & c, std::int64_t p,
                                                 std::uint64_t work_budget)
{
    if (p < 1) {
        throw std::invalid_argument("cyclespace bound p must be a positive integer");
    }
    c.edges().check_graph(g);
    const auto unit = LengthFn::unit(g);
    VerificationResult result;

    auto short_cycles = enumerate_cycles_up_to(g, unit, Rational(p), work_budget);
    Gf2Span span(g);
    Rational max_gen(0);
    for (const auto & s : short_cycles) {
        span.add(s.edges());
        max_gen = std::max(max_gen, Rational(s.length()));
    }
    for (const auto & basis : fundamental_cycles(g)) {
        if (!span.contains(basis.edges())) {
            result.violations.push_back({Premise::generation,
                                         "fundamental cycle of length " + std::to_string(basis.length())
                                             + " is not a sum of cycles of length <= " + std::to_string(p),
                                         basis.edges(), std::nullopt, std::nullopt, std::nullopt});
        }
    }

    auto geo = is_geodesic_cycle(g, unit, c);
    if (!geo) {
        const auto & w = *geo.witness;
        result.violations.push_back({Premise::geodesic,
                                     "vertices " + std::to_string(w.a) + " and " + std::to_string(w.b)
                                         + " are at distance " + w.distance.to_string()
                                         + " but the shorter cycle arc has length " + w.arc.to_string(),
                                     std::nullopt, std::nullopt, std::nullopt, w});
    }

    if (result.violations.empty()) {
        Certificate cert{Flavor::cyclespace, c, {}, Rational(p)};
        result.verified = CertificateChecks::make(std::move(cert), Rational(c.length()), max_gen, c.length() / p);
    }
    return result;
}

VerificationResult verify_any(const Graph & g, const LengthFn & l, const Certificate & cert,
                              std::uint64_t work_budget)
{
    switch (cert.flavor) {
    case Flavor::rational_geodesic:
        return verify_certificate(g, l, cert);
    case Flavor::unit_precise:
        l.check_graph(g);
        if (!l.is_unit()) {
            throw std::invalid_argument("unit-precise certificates require unit lengths");
        }
        return lower_bound_unit(g, cert);
    case Flavor::cyclespace:
        l.check_graph(g);
        if (!l.is_unit()) {
            throw std::invalid_argument("cyclespace certificates require unit lengths");
        }
        if (!cert.bound.is_integer() || !cert.bound.is_positive()) {
            throw std::invalid_argument("cyclespace bound p must be a positive integer");
        }
        return verify_cyclespace_certificate(g, cert.cycle, cert.bound.num(), work_budget);
    }
    throw std::invalid_argument("unknown flavor");
}

std::int64_t scale_factor(const LengthFn & l, const Rational & r)
{
    if (!r.is_positive()) {
        throw std::invalid_argument("bound must be positive");
    }
    std::int64_t m = r.den();
    for (const auto & v : l.values()) {
        m = checked_lcm(m, v.den());
    }
    return m;
}

SubdivisionMap subdivide(const Graph & g, const LengthFn & l, std::int64_t scale)
{
    l.check_graph(g);
    if (scale < 1) {
        throw GraphError("scale factor must be a positive integer");
    }
    std::vector<std::int64_t> multiplicity;
    for (int e = 0; e < g.edge_count(); ++e) {
        Rational m = l[e] * Rational(scale);
        if (!m.is_integer()) {
            throw GraphError("edge " + std::to_string(e) + ": " + std::to_string(scale) + " * " + l[e].to_string()
                             + " is not an integer");
        }
        multiplicity.push_back(m.num());
    }
    auto map = subdivide_edges(g, multiplicity);
    map.scale = scale;
    return map;
}

std::optional<Certificate> search_certificate(const Graph & g, const LengthFn & l, const Rational & r,
                                              std::uint64_t work_budget)
{
    l.check_graph(g);
    auto short_cycles = enumerate_cycles_up_to(g, l, r, work_budget);
    if (short_cycles.empty()) {
        return std::nullopt;
    }
    Gf2Span span(g);
    for (const auto & s : short_cycles) {
        span.add(s.edges());
    }

    Rational diameter(0);
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (const auto & d : distances_from(g, l, v)) {
            if (d) {
                diameter = std::max(diameter, *d);
            }
        }
    }
    Rational longest_edge = *std::max_element(l.values().begin(), l.values().end());
    auto candidates = enumerate_cycles_up_to(g, l, diameter * 2 + longest_edge * 2, work_budget);

    std::vector<Rational> lengths;
    lengths.reserve(candidates.size());
    for (const auto & c : candidates) {
        lengths.push_back(cycle_length(l, c));
    }
    std::vector<std::size_t> order(candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return lengths[a] > lengths[b]; });

    for (auto i : order) {
        const auto & c = candidates[i];
        auto combination = span.express(c.edges());
        if (!combination || !is_geodesic_cycle(g, l, c)) {
            continue;
        }
        std::vector<Cycle> generators;
        for (auto j : *combination) {
            generators.push_back(short_cycles[j]);
        }
        return Certificate{Flavor::rational_geodesic, c, std::move(generators), r};
    }
    return std::nullopt;
}

} // namespace twcert
