#include "twcert/metric.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace twcert {

LengthFn::LengthFn(const Graph & g, std::vector<Rational> values) :
    values_(std::move(values)),
    fingerprint_(g.fingerprint())
{
    if (static_cast<int>(values_.size()) != g.edge_count()) {
        throw GraphError("length function has " + std::to_string(values_.size()) + " values for "
                         + std::to_string(g.edge_count()) + " edges");
    }
    for (std::size_t e = 0; e < values_.size(); ++e) {
        if (!values_[e].is_positive()) {
            throw GraphError("length of edge " + std::to_string(e) + " is not positive");
        }
    }
}

LengthFn LengthFn::unit(const Graph & g)
{
    return {g, std::vector<Rational>(static_cast<std::size_t>(g.edge_count()), Rational(1))};
}

bool LengthFn::is_unit() const
{
    return std::all_of(values_.begin(), values_.end(), [](const Rational & r) { return r == Rational(1); });
}

LengthFn LengthFn::scaled(const Rational & factor) const
{
    if (!factor.is_positive()) {
        throw GraphError("scale factor must be positive");
    }
    LengthFn out = *this;
    for (auto & v : out.values_) {
        v *= factor;
    }
    return out;
}

void LengthFn::check_graph(const Graph & g) const
{
    if (g.fingerprint() != fingerprint_ || g.edge_count() != size()) {
        throw GraphError("length function does not belong to this graph");
    }
}

std::vector<Distance> distances_from(const Graph & g, const LengthFn & l, int source)
{
    l.check_graph(g);
    if (!g.is_vertex(source)) {
        throw GraphError("invalid vertex " + std::to_string(source));
    }
    std::vector<Distance> dist(static_cast<std::size_t>(g.vertex_count()));
    std::vector<bool> done(static_cast<std::size_t>(g.vertex_count()), false);
    using Item = std::pair<Rational, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[static_cast<std::size_t>(source)] = Rational(0);
    queue.emplace(Rational(0), source);
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (done[static_cast<std::size_t>(v)]) {
            continue;
        }
        done[static_cast<std::size_t>(v)] = true;
        for (const auto & inc : g.neighbours(v)) {
            Rational cand = d + l[inc.edge];
            auto & slot = dist[static_cast<std::size_t>(inc.vertex)];
            if (!slot || cand < *slot) {
                slot = cand;
                queue.emplace(cand, inc.vertex);
            }
        }
    }
    return dist;
}

Distance distance(const Graph & g, const LengthFn & l, int u, int v)
{
    if (!g.is_vertex(v)) {
        throw GraphError("invalid vertex " + std::to_string(v));
    }
    return distances_from(g, l, u)[static_cast<std::size_t>(v)];
}

Rational subgraph_length(const LengthFn & l, const EdgeSet & s)
{
    if (s.size() != l.size()) {
        throw GraphError("edge set and length function belong to different graphs");
    }
    Rational total(0);
    for (int e : s.members()) {
        total += l[e];
    }
    return total;
}

GeodesicCheck is_geodesic_cycle(const Graph & g, const LengthFn & l, const Cycle & c)
{
    l.check_graph(g);
    c.edges().check_graph(g);
    auto order = c.edge_order();
    std::vector<Rational> prefix{Rational(0)};
    for (int e : order) {
        prefix.push_back(prefix.back() + l[e]);
    }
    const Rational total = prefix.back();
    auto verts = c.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        auto dist = distances_from(g, l, verts[i]);
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            Rational forward = prefix[j] - prefix[i];
            Rational arc = std::min(forward, total - forward);
            const auto & d = dist[static_cast<std::size_t>(verts[j])];
            if (*d != arc) {
                return {false, GeodesicWitness{verts[i], verts[j], arc, *d}};
            }
        }
    }
    return {};
}

namespace {

class CycleEnumerator {
public:
    CycleEnumerator(const Graph & g, const LengthFn & l, const Rational & bound, std::uint64_t budget) :
        g_(g), l_(l), bound_(bound), budget_(budget, "cycle enumeration"),
        on_path_(static_cast<std::size_t>(g.vertex_count()), false)
    {
    }

    std::vector<Cycle> run()
    {
        for (int anchor = 0; anchor < g_.edge_count(); ++anchor) {
            if (l_[anchor] > bound_) {
                continue;
            }
            anchor_ = anchor;
            const auto & e = g_.edge(anchor);
            target_ = e.v;
            compute_lower_bounds();
            if (!to_target_[static_cast<std::size_t>(e.u)]
                || l_[anchor] + *to_target_[static_cast<std::size_t>(e.u)] > bound_) {
                continue;
            }
            path_ = {e.u};
            on_path_[static_cast<std::size_t>(e.u)] = true;
            extend(e.u, l_[anchor]);
            on_path_[static_cast<std::size_t>(e.u)] = false;
        }
        return std::move(found_);
    }

private:
    // distances to the anchor's far end using only edges above the anchor
    void compute_lower_bounds()
    {
        to_target_.assign(static_cast<std::size_t>(g_.vertex_count()), std::nullopt);
        using Item = std::pair<Rational, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
        to_target_[static_cast<std::size_t>(target_)] = Rational(0);
        queue.emplace(Rational(0), target_);
        std::vector<bool> done(static_cast<std::size_t>(g_.vertex_count()), false);
        while (!queue.empty()) {
            auto [d, v] = queue.top();
            queue.pop();
            if (done[static_cast<std::size_t>(v)]) {
                continue;
            }
            done[static_cast<std::size_t>(v)] = true;
            for (const auto & inc : g_.neighbours(v)) {
                if (inc.edge <= anchor_) {
                    continue;
                }
                Rational cand = d + l_[inc.edge];
                auto & slot = to_target_[static_cast<std::size_t>(inc.vertex)];
                if (!slot || cand < *slot) {
                    slot = cand;
                    queue.emplace(cand, inc.vertex);
                }
            }
        }
    }

    void extend(int v, const Rational & length)
    {
        for (const auto & inc : g_.neighbours(v)) {
            if (inc.edge <= anchor_ || on_path_[static_cast<std::size_t>(inc.vertex)]) {
                continue;
            }
            const auto & lb = to_target_[static_cast<std::size_t>(inc.vertex)];
            Rational next = length + l_[inc.edge];
            if (!lb || next + *lb > bound_) {
                continue;
            }
            budget_.spend();
            if (inc.vertex == target_) {
                path_.push_back(target_);
                found_.push_back(Cycle::from_vertices(g_, path_));
                path_.pop_back();
                continue;
            }
            path_.push_back(inc.vertex);
            on_path_[static_cast<std::size_t>(inc.vertex)] = true;
            extend(inc.vertex, next);
            on_path_[static_cast<std::size_t>(inc.vertex)] = false;
            path_.pop_back();
        }
    }

    const Graph & g_;
    const LengthFn & l_;
    Rational bound_;
    WorkBudget budget_;
    int anchor_ = -1;
    int target_ = -1;
    std::vector<Distance> to_target_;
    std::vector<bool> on_path_;
    std::vector<int> path_;
    std::vector<Cycle> found_;
};

} // namespace

std::vector<Cycle> enumerate_cycles_up_to(const Graph & g, const LengthFn & l, const Rational & bound,
                                          std::uint64_t work_budget)
{
    l.check_graph(g);
    if (!bound.is_positive()) {
        throw std::invalid_argument("cycle length bound must be positive");
    }
    return CycleEnumerator(g, l, bound, work_budget).run();
}

AlgebraicGeodesicCheck is_geodesic_algebraic(const Graph & g, const LengthFn & l, const Cycle & c,
                                             std::uint64_t work_budget)
{
    l.check_graph(g);
    c.edges().check_graph(g);
    const Rational total = cycle_length(l, c);
    for (auto & first : enumerate_cycles_up_to(g, l, total, work_budget)) {
        if (cycle_length(l, first) >= total || !first.edges().intersects(c.edges())) {
            continue;
        }
        auto check = as_cycle(g, first.edges() ^ c.edges());
        if (check && cycle_length(l, *check.cycle) < total) {
            return {false, AlgebraicWitness{std::move(first), std::move(*check.cycle)}};
        }
    }
    return {};
}

} // namespace twcert
