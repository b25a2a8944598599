#include "twcert/lemmas.hpp"

#include "twcert/metric.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace twcert {

namespace {

int range_from(const std::vector<int> & dist, const VertexSet & Y, int d)
{
    auto members = Y.members();
    int best = 0;
    for (int j = 0; j < static_cast<int>(members.size()); ++j) {
        int reach = j * d;
        int ball = 0;
        for (int z : members) {
            int dz = dist[static_cast<std::size_t>(z)];
            if (dz >= 0 && dz <= reach) {
                ++ball;
            }
        }
        if (ball >= 1 + j) {
            best = j;
        }
    }
    return best;
}

void check_cycle_of(const Graph & g, const Cycle & c)
{
    c.edges().check_graph(g);
}

} // namespace

int range(const Graph & g, const VertexSet & Y, int y, int d)
{
    Y.check_graph(g);
    if (d < 1) {
        throw PreconditionError("range: d must be at least 1");
    }
    if (!g.is_vertex(y) || !Y.contains(y)) {
        throw PreconditionError("range: vertex " + std::to_string(y) + " is not in Y");
    }
    return range_from(bfs_distances(g, y), Y, d);
}

bool is_cycle_arc(const Cycle & c, const VertexSet & s)
{
    auto verts = c.vertices();
    const auto len = verts.size();
    std::size_t inside = 0;
    std::size_t starts = 0;
    for (std::size_t i = 0; i < len; ++i) {
        bool here = s.contains(verts[i]);
        bool before = s.contains(verts[(i + len - 1) % len]);
        inside += here ? 1 : 0;
        starts += (here && !before) ? 1 : 0;
    }
    return inside == 0 || inside == len || starts == 1;
}

int set_distance(const Graph & g, const VertexSet & a, const VertexSet & b)
{
    a.check_same(b);
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue;
    for (int v : a.members()) {
        dist[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (b.contains(v)) {
            return dist[static_cast<std::size_t>(v)];
        }
        for (const auto & inc : g.neighbours(v)) {
            auto & dw = dist[static_cast<std::size_t>(inc.vertex)];
            if (dw < 0) {
                dw = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(inc.vertex);
            }
        }
    }
    return -1;
}

RFamily extend_separator(const Graph & g, const Cycle & c, const VertexSet & X, int d)
{
    check_cycle_of(g, c);
    X.check_graph(g);
    if (d < 1) {
        throw PreconditionError("extend_separator: d must be at least 1");
    }
    RFamily fam;
    fam.d = d;
    VertexSet remaining = X;
    const auto verts = c.vertices();
    const int len = c.length();

    for (;;) {
        auto on_cycle = remaining & c.vertex_set();
        if (on_cycle.empty()) {
            break;
        }
        int centre = -1;
        int best = -1;
        std::vector<int> centre_dist;
        for (int x : on_cycle.members()) {
            auto dist = bfs_distances(g, x);
            int j = range_from(dist, remaining, d);
            if (j > best) {
                best = j;
                centre = x;
                centre_dist = std::move(dist);
            }
        }

        const int reach = best * d;
        VertexSet ball(g);
        for (int z : remaining.members()) {
            int dz = centre_dist[static_cast<std::size_t>(z)];
            if (dz >= 0 && dz <= reach) {
                ball.insert(z);
            }
        }

        // walk both ways from the centre, keeping each walk up to the last
        // ball vertex it meets within `reach` steps
        const int p = c.position(centre);
        const int limit = std::min(reach, len - 1);
        int forward = 0;
        int backward = 0;
        for (int t = 1; t <= limit; ++t) {
            if (ball.contains(verts[static_cast<std::size_t>((p + t) % len)])) {
                forward = t;
            }
            if (ball.contains(verts[static_cast<std::size_t>((p - t + len) % len)])) {
                backward = t;
            }
        }
        VertexSet arc(g);
        if (forward + backward >= len - 1) {
            arc = c.vertex_set();
        }
        else {
            for (int t = -backward; t <= forward; ++t) {
                arc.insert(verts[static_cast<std::size_t>((p + t + len) % len)]);
            }
        }

        fam.parts.push_back(ball | arc);
        fam.steps.push_back({centre, best, ball, arc, remaining});
        remaining -= ball;
    }
    if (!remaining.empty()) {
        fam.parts.push_back(remaining);
    }
    return fam;
}

std::vector<std::string> rfamily_violations(const Graph & g, const Cycle & c, const VertexSet & X,
                                            const RFamily & fam)
{
    std::vector<std::string> out;
    VertexSet all(g);
    bool disjoint = true;
    bool nonempty = true;
    bool arcs = true;
    for (const auto & part : fam.parts) {
        part.check_graph(g);
        if (part.empty()) {
            nonempty = false;
        }
        if (part.intersects(all)) {
            disjoint = false;
        }
        all |= part;
        if (!is_cycle_arc(c, part)) {
            arcs = false;
        }
    }
    if (!disjoint) {
        out.emplace_back("disjoint");
    }
    if (!nonempty) {
        out.emplace_back("nonempty");
    }
    if (!X.is_subset_of(all)) {
        out.emplace_back("covers-x");
    }
    if (!all.is_subset_of(X | c.vertex_set())) {
        out.emplace_back("inside-x-and-cycle");
    }
    if ((all & c.vertex_set()).count() > 2 * fam.d * X.count()) {
        out.emplace_back("cycle-budget");
    }
    if (!arcs) {
        out.emplace_back("arc-connected");
    }
    for (std::size_t i = 0; i < fam.parts.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.parts.size(); ++j) {
            int dist = set_distance(g, fam.parts[i], fam.parts[j]);
            if (dist >= 0 && dist <= fam.d) {
                out.emplace_back("separated");
                return out;
            }
        }
    }
    return out;
}

Dichotomy absorb_component(const Graph & g, const Cycle & c, std::span<const Cycle> generators,
                           std::span<const VertexSet> parts)
{
    check_cycle_of(g, c);
    if (f2_sum(g, generators) != c.edges()) {
        throw PreconditionError("absorb_component: generators do not sum to the cycle");
    }
    std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()), -1);
    VertexSet covered(g);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        parts[i].check_graph(g);
        if (parts[i].intersects(covered)) {
            throw PreconditionError("absorb_component: parts are not disjoint");
        }
        if (!is_cycle_arc(c, parts[i])) {
            throw PreconditionError("absorb_component: part " + std::to_string(i) + " meets the cycle in more than one arc");
        }
        covered |= parts[i];
        for (int v : parts[i].members()) {
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }

    for (std::size_t i = 0; i < generators.size(); ++i) {
        int first = -1;
        for (int v : generators[i].vertices()) {
            int p = part_of[static_cast<std::size_t>(v)];
            if (p < 0) {
                continue;
            }
            if (first < 0) {
                first = p;
            }
            else if (p != first) {
                return DichotomyWitness{i, static_cast<std::size_t>(std::min(first, p)),
                                        static_cast<std::size_t>(std::max(first, p))};
            }
        }
    }

    auto label = component_labels(g, covered);
    int chosen = -1;
    for (int v : c.vertices()) {
        int l = label[static_cast<std::size_t>(v)];
        if (l < 0) {
            continue;
        }
        if (chosen < 0) {
            chosen = l;
        }
        else if (l != chosen) {
            throw InternalInvariantError("absorb_component: uncovered cycle vertices lie in different components");
        }
    }
    if (chosen < 0) {
        // the parts cover the whole cycle; any component will do
        auto first = std::find_if(label.begin(), label.end(), [](int l) { return l >= 0; });
        chosen = first == label.end() ? -1 : *first;
    }
    VertexSet component(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (chosen >= 0 && label[static_cast<std::size_t>(v)] == chosen) {
            component.insert(v);
        }
    }
    return Absorbed{component};
}

std::vector<ParityFailure> parity_failures(const Graph & g, const Cycle & c, std::span<const VertexSet> parts)
{
    check_cycle_of(g, c);
    std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()), -1);
    VertexSet covered(g);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        covered |= parts[i];
        for (int v : parts[i].members()) {
            part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    }
    auto label = component_labels(g, covered);
    std::map<std::pair<int, int>, int> crossings;
    for (int e : c.edges().members()) {
        int a = g.edge(e).u;
        int b = g.edge(e).v;
        for (int flip = 0; flip < 2; ++flip) {
            int pa = part_of[static_cast<std::size_t>(a)];
            int lb = label[static_cast<std::size_t>(b)];
            if (pa >= 0 && lb >= 0) {
                ++crossings[{lb, pa}];
            }
            std::swap(a, b);
        }
    }
    std::vector<ParityFailure> out;
    for (const auto & [key, count] : crossings) {
        if (count % 2 != 0) {
            out.push_back({static_cast<std::size_t>(key.first), static_cast<std::size_t>(key.second), count});
        }
    }
    return out;
}

namespace {

// Largest number of cycle vertices inside one component of g - X.
int best_component_share(const Graph & g, const Cycle & c, const VertexSet & X)
{
    auto label = component_labels(g, X);
    std::vector<int> count(static_cast<std::size_t>(g.vertex_count()), 0);
    int best = 0;
    for (int v : c.vertices()) {
        int l = label[static_cast<std::size_t>(v)];
        if (l >= 0) {
            best = std::max(best, ++count[static_cast<std::size_t>(l)]);
        }
    }
    return best;
}

// Advances a sorted k-combination of {0..n-1} in colexicographic order.
bool next_colex(std::vector<int> & a, int n)
{
    const auto k = a.size();
    for (std::size_t i = 0; i < k; ++i) {
        int cap = i + 1 < k ? a[i + 1] : n;
        if (a[i] + 1 < cap) {
            ++a[i];
            for (std::size_t j = 0; j < i; ++j) {
                a[j] = static_cast<int>(j);
            }
            return true;
        }
    }
    return false;
}

} // namespace

PreciseCheck check_precise_theorem(const Graph & g, const Cycle & c, std::span<const Cycle> generators, int p, int k,
                                   std::uint64_t work_budget)
{
    check_cycle_of(g, c);
    if (p < 1 || k < 0) {
        throw PreconditionError("check_precise_theorem: need p >= 1 and k >= 0");
    }
    PreciseCheck result;
    bool short_enough = std::all_of(generators.begin(), generators.end(),
                                    [&](const Cycle & d) { return d.length() <= p; });
    result.premises_hold = f2_sum(g, generators) == c.edges() && short_enough
        && static_cast<bool>(is_geodesic_cycle(g, LengthFn::unit(g), c))
        && c.length() >= 4 * (p / 2) * k;

    WorkBudget budget(work_budget, "precise theorem check");
    const int n = g.vertex_count();
    for (int size = 0; size <= std::min(k, n); ++size) {
        std::vector<int> combo(static_cast<std::size_t>(size));
        std::iota(combo.begin(), combo.end(), 0);
        do {
            budget.spend();
            ++result.subsets_checked;
            VertexSet X(g, combo);
            if (2 * best_component_share(g, c, X) < c.length()) {
                result.pass = false;
                result.counterexample = X;
                return result;
            }
        } while (next_colex(combo, n));
    }
    return result;
}

bool is_balanced_separator(const Graph & g, const VertexSet & A, const VertexSet & X)
{
    A.check_graph(g);
    X.check_graph(g);
    const int rest = (A - X).count();
    auto label = component_labels(g, X);
    std::vector<int> count(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : A.members()) {
        int l = label[static_cast<std::size_t>(v)];
        if (l >= 0 && 2 * ++count[static_cast<std::size_t>(l)] > rest) {
            return false;
        }
    }
    return true;
}

namespace {

bool separator_search(const Graph & g, const VertexSet & A, int k, VertexSet & X, int next, int size,
                      WorkBudget & budget)
{
    budget.spend();
    if (is_balanced_separator(g, A, X)) {
        return true;
    }
    if (size == k) {
        return false;
    }
    for (int v = next; v < g.vertex_count(); ++v) {
        X.insert(v);
        if (separator_search(g, A, k, X, v + 1, size + 1, budget)) {
            return true;
        }
        X.erase(v);
    }
    return false;
}

} // namespace

std::optional<VertexSet> balanced_separator(const Graph & g, const VertexSet & A, int k, std::uint64_t work_budget)
{
    A.check_graph(g);
    if (k < 0) {
        throw PreconditionError("balanced_separator: k must be nonnegative");
    }
    WorkBudget budget(work_budget, "balanced separator search");
    VertexSet X(g);
    if (separator_search(g, A, k, X, 0, 0, budget)) {
        return X;
    }
    return std::nullopt;
}

namespace {

constexpr int hard_vertex_cap = 24;

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph & g)
{
    std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto & e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
    return adj;
}

void check_cap(const Graph & g)
{
    if (g.vertex_count() > hard_vertex_cap) {
        throw OracleLimitExceeded("exact tree-width supports at most " + std::to_string(hard_vertex_cap) + " vertices");
    }
}

// Largest minimum degree over the repeated min-degree deletion.
int degeneracy(std::vector<Mask> adj, Mask alive)
{
    int best = 0;
    while (alive != 0) {
        int pick = -1;
        int low = 64;
        for (Mask m = alive; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            int deg = std::popcount(adj[static_cast<std::size_t>(v)] & alive);
            if (deg < low) {
                low = deg;
                pick = v;
            }
        }
        best = std::max(best, low);
        alive &= ~(Mask{1} << pick);
    }
    return best;
}

class EliminationSearch {
public:
    explicit EliminationSearch(const Graph & g) : n_(g.vertex_count()), adj_(adjacency_masks(g)) {}

    int run()
    {
        if (n_ == 0) {
            return 0;
        }
        const Mask all = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
        best_ = greedy_min_degree(adj_, all);
        search(adj_, all, 0);
        return best_;
    }

private:
    static void eliminate(std::vector<Mask> & adj, int v)
    {
        Mask nb = adj[static_cast<std::size_t>(v)];
        for (Mask m = nb; m != 0; m &= m - 1) {
            int u = std::countr_zero(m);
            adj[static_cast<std::size_t>(u)] |= nb & ~(Mask{1} << u);
            adj[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
        }
        adj[static_cast<std::size_t>(v)] = 0;
    }

    static int greedy_min_degree(std::vector<Mask> adj, Mask alive)
    {
        int width = 0;
        while (alive != 0) {
            int pick = -1;
            int low = 64;
            for (Mask m = alive; m != 0; m &= m - 1) {
                int v = std::countr_zero(m);
                int deg = std::popcount(adj[static_cast<std::size_t>(v)]);
                if (deg < low) {
                    low = deg;
                    pick = v;
                }
            }
            width = std::max(width, low);
            eliminate(adj, pick);
            alive &= ~(Mask{1} << pick);
        }
        return width;
    }

    void search(const std::vector<Mask> & adj, Mask alive, int width)
    {
        if (width >= best_) {
            return;
        }
        const int left = std::popcount(alive);
        if (left - 1 <= width) {
            best_ = width;
            return;
        }
        if (std::max(width, degeneracy(adj, alive)) >= best_) {
            return;
        }
        auto seen = visited_.find(alive);
        if (seen != visited_.end() && seen->second <= width) {
            return;
        }
        visited_[alive] = width;

        for (Mask m = alive; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            Mask nb = adj[static_cast<std::size_t>(v)];
            bool simplicial = true;
            for (Mask r = nb; r != 0 && simplicial; r &= r - 1) {
                int u = std::countr_zero(r);
                simplicial = (nb & ~(Mask{1} << u) & ~adj[static_cast<std::size_t>(u)]) == 0;
            }
            if (simplicial) {
                auto next = adj;
                eliminate(next, v);
                search(next, alive & ~(Mask{1} << v), std::max(width, std::popcount(nb)));
                return;
            }
        }

        for (Mask m = alive; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            int deg = std::popcount(adj[static_cast<std::size_t>(v)]);
            if (std::max(width, deg) >= best_) {
                continue;
            }
            auto next = adj;
            eliminate(next, v);
            search(next, alive & ~(Mask{1} << v), std::max(width, deg));
        }
    }

    int n_;
    std::vector<Mask> adj_;
    int best_ = 0;
    std::unordered_map<Mask, int> visited_;
};

} // namespace

int treewidth_by_elimination(const Graph & g)
{
    check_cap(g);
    return EliminationSearch(g).run();
}

int treewidth_by_subsets(const Graph & g)
{
    check_cap(g);
    const int n = g.vertex_count();
    if (n == 0) {
        return 0;
    }
    const auto adj = adjacency_masks(g);
    const Mask all = (Mask{1} << n) - 1;
    constexpr std::int8_t unset = 127;
    // tw[S]: best width of eliminating S first
    std::vector<std::int8_t> tw(std::size_t{1} << n, unset);
    tw[0] = -1;
    std::vector<std::pair<Mask, Mask>> comps;
    for (Mask s = 0; s < all; ++s) {
        if (tw[s] == unset) {
            continue;
        }
        // components of G[s] and their outer neighbourhoods
        comps.clear();
        for (Mask left = s; left != 0;) {
            Mask comp = left & (~left + 1);
            Mask frontier = comp;
            while (frontier != 0) {
                Mask grow = 0;
                for (Mask f = frontier; f != 0; f &= f - 1) {
                    grow |= adj[static_cast<std::size_t>(std::countr_zero(f))];
                }
                grow &= s & ~comp;
                comp |= grow;
                frontier = grow;
            }
            Mask border = 0;
            for (Mask f = comp; f != 0; f &= f - 1) {
                border |= adj[static_cast<std::size_t>(std::countr_zero(f))];
            }
            comps.emplace_back(comp, border & ~s);
            left &= ~comp;
        }
        for (Mask rest = all & ~s; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            Mask q = adj[static_cast<std::size_t>(v)] & ~s;
            for (const auto & [comp, border] : comps) {
                if ((comp & adj[static_cast<std::size_t>(v)]) != 0) {
                    q |= border;
                }
            }
            q &= ~(Mask{1} << v);
            auto value = static_cast<std::int8_t>(std::max<int>(tw[s], std::popcount(q)));
            auto & slot = tw[s | (Mask{1} << v)];
            slot = std::min(slot, value);
        }
    }
    return tw[all];
}

int exact_treewidth(const Graph & g, int vertex_limit)
{
    if (g.vertex_count() > vertex_limit) {
        throw OracleLimitExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices, oracle limit is "
                                  + std::to_string(vertex_limit));
    }
    int a = treewidth_by_elimination(g);
    int b = treewidth_by_subsets(g);
    if (a != b) {
        throw InternalInvariantError("tree-width solvers disagree: elimination " + std::to_string(a) + ", subsets "
                                     + std::to_string(b));
    }
    return a;
}

} // namespace twcert
