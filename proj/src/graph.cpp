#include "twcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace twcert {

namespace {

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t value)
{
    for (int k = 0; k < 8; ++k) {
        h ^= (value >> (8 * k)) & 0xffU;
        h *= 1099511628211ULL;
    }
    return h;
}

void xor_into(std::vector<std::uint64_t> & a, const std::vector<std::uint64_t> & b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), 0);
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        a[k] ^= b[k];
    }
}

} // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) :
    vertex_count_(vertex_count),
    adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0)))
{
    if (vertex_count < 0) {
        throw GraphError("negative vertex count");
    }
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    std::uint64_t h = fnv_mix(14695981039346656037ULL, static_cast<std::uint64_t>(vertex_count));
    for (std::size_t id = 0; id < edges.size(); ++id) {
        auto [u, v] = edges[id];
        if (!is_vertex(u) || !is_vertex(v)) {
            throw GraphError("edge " + std::to_string(id) + " has an endpoint out of range");
        }
        if (u == v) {
            throw GraphError("edge " + std::to_string(id) + " is a loop");
        }
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
            throw GraphError("edge " + std::to_string(id) + " duplicates an earlier edge");
        }
        edges_.push_back({u, v});
        adjacency_[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(id)});
        adjacency_[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(id)});
        h = fnv_mix(h, static_cast<std::uint64_t>(u));
        h = fnv_mix(h, static_cast<std::uint64_t>(v));
    }
    for (auto & list : adjacency_) {
        std::sort(list.begin(), list.end(), [](const Incidence & a, const Incidence & b) { return a.vertex < b.vertex; });
    }
    fingerprint_ = h;
}

int Graph::find_edge(int u, int v) const
{
    if (!is_vertex(u) || !is_vertex(v)) {
        return -1;
    }
    auto list = neighbours(degree(u) <= degree(v) ? u : v);
    int target = degree(u) <= degree(v) ? v : u;
    auto it = std::lower_bound(list.begin(), list.end(), target,
                               [](const Incidence & inc, int x) { return inc.vertex < x; });
    return it != list.end() && it->vertex == target ? it->edge : -1;
}

int Graph::other_end(int edge_id, int v) const
{
    const auto & e = edge(edge_id);
    if (e.u == v) {
        return e.v;
    }
    if (e.v == v) {
        return e.u;
    }
    throw GraphError("vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(edge_id));
}

std::vector<std::pair<int, int>> Graph::edge_pairs() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_.size());
    for (const auto & e : edges_) {
        out.emplace_back(e.u, e.v);
    }
    return out;
}

Cycle Cycle::from_vertices(const Graph & g, std::span<const int> sequence)
{
    if (sequence.size() < 3) {
        throw GraphError("a cycle needs at least three vertices");
    }
    Cycle c;
    c.edges_ = EdgeSet(g);
    c.vertex_set_ = VertexSet(g);
    c.position_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        int v = sequence[i];
        if (!g.is_vertex(v)) {
            throw GraphError("cycle vertex " + std::to_string(v) + " out of range");
        }
        if (c.position_[static_cast<std::size_t>(v)] >= 0) {
            throw GraphError("cycle repeats vertex " + std::to_string(v));
        }
        c.position_[static_cast<std::size_t>(v)] = static_cast<int>(i);
        c.vertex_set_.insert(v);
    }
    c.vertices_.assign(sequence.begin(), sequence.end());
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        int a = sequence[i];
        int b = sequence[(i + 1) % sequence.size()];
        int e = g.find_edge(a, b);
        if (e < 0) {
            throw GraphError("no edge between cycle vertices " + std::to_string(a) + " and " + std::to_string(b));
        }
        c.edge_order_.push_back(e);
        c.edges_.insert(e);
    }
    return c;
}

int Cycle::arc_distance(int v, int w) const
{
    int pv = position(v);
    int pw = position(w);
    if (pv < 0 || pw < 0) {
        throw GraphError("arc_distance: vertex not on cycle");
    }
    int forward = (pw - pv + length()) % length();
    return std::min(forward, length() - forward);
}

const char * to_string(CycleDefect d)
{
    switch (d) {
    case CycleDefect::none: return "none";
    case CycleDefect::empty: return "empty";
    case CycleDefect::bad_degree: return "bad-degree";
    case CycleDefect::disconnected: return "disconnected";
    }
    return "unknown";
}

CycleCheck as_cycle(const Graph & g, const EdgeSet & s)
{
    s.check_graph(g);
    CycleCheck result;
    auto members = s.members();
    if (members.empty()) {
        result.defect = CycleDefect::empty;
        return result;
    }
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : members) {
        ++deg[static_cast<std::size_t>(g.edge(e).u)];
        ++deg[static_cast<std::size_t>(g.edge(e).v)];
    }
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = deg[static_cast<std::size_t>(v)];
        if (d != 0 && d != 2) {
            result.defect = CycleDefect::bad_degree;
            result.vertex = v;
            return result;
        }
        if (d == 2 && start < 0) {
            start = v;
        }
    }

    // walk from the least vertex towards its smaller neighbour in s
    std::vector<int> order{start};
    int prev = -1;
    int cur = start;
    for (;;) {
        int next = -1;
        for (const auto & inc : g.neighbours(cur)) {
            if (s.contains(inc.edge) && inc.vertex != prev) {
                next = inc.vertex;
                break;
            }
        }
        if (next == start) {
            break;
        }
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    if (order.size() != members.size()) {
        result.defect = CycleDefect::disconnected;
        return result;
    }
    result.cycle = Cycle::from_vertices(g, order);
    return result;
}

EdgeSet f2_sum(const Graph & g, std::span<const EdgeSet> sets)
{
    EdgeSet sum(g);
    for (const auto & s : sets) {
        sum ^= s;
    }
    return sum;
}

EdgeSet f2_sum(const Graph & g, std::span<const Cycle> cycles)
{
    EdgeSet sum(g);
    for (const auto & c : cycles) {
        sum ^= c.edges();
    }
    return sum;
}

Gf2Span::Gf2Span(const Graph & g) :
    universe_(g),
    pivot_row_(static_cast<std::size_t>(g.edge_count()), -1)
{
}

bool Gf2Span::add(const EdgeSet & v)
{
    universe_.check_same(v);
    Row row{v, {}};
    std::size_t index = generators_++;
    row.combination.assign(index / 64 + 1, 0);
    row.combination[index / 64] |= std::uint64_t{1} << (index % 64);
    for (int p = row.vector.lowest(); p >= 0; p = row.vector.lowest()) {
        int r = pivot_row_[static_cast<std::size_t>(p)];
        if (r < 0) {
            pivot_row_[static_cast<std::size_t>(p)] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        row.vector ^= rows_[static_cast<std::size_t>(r)].vector;
        xor_into(row.combination, rows_[static_cast<std::size_t>(r)].combination);
    }
    return false;
}

std::optional<std::vector<std::size_t>> Gf2Span::express(const EdgeSet & target) const
{
    universe_.check_same(target);
    EdgeSet rest = target;
    std::vector<std::uint64_t> combination;
    for (int p = rest.lowest(); p >= 0; p = rest.lowest()) {
        int r = pivot_row_[static_cast<std::size_t>(p)];
        if (r < 0) {
            return std::nullopt;
        }
        rest ^= rows_[static_cast<std::size_t>(r)].vector;
        xor_into(combination, rows_[static_cast<std::size_t>(r)].combination);
    }
    std::vector<std::size_t> indices;
    for (std::size_t k = 0; k < combination.size(); ++k) {
        auto w = combination[k];
        while (w != 0) {
            indices.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return indices;
}

std::optional<std::vector<std::size_t>> decompose_in_span(const Graph & g, const EdgeSet & target,
                                                          std::span<const EdgeSet> generators)
{
    target.check_graph(g);
    Gf2Span span(g);
    for (const auto & gen : generators) {
        gen.check_graph(g);
        span.add(gen);
    }
    auto indices = span.express(target);
    if (!indices) {
        return std::nullopt;
    }
    EdgeSet check(g);
    for (auto i : *indices) {
        check ^= generators[i];
    }
    if (check != target) {
        throw std::logic_error("decompose_in_span: re-summation mismatch");
    }
    return indices;
}

std::vector<int> component_labels(const Graph & g, const VertexSet & removed)
{
    removed.check_graph(g);
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (removed.contains(s) || label[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto & inc : g.neighbours(v)) {
                auto & l = label[static_cast<std::size_t>(inc.vertex)];
                if (l < 0 && !removed.contains(inc.vertex)) {
                    l = next;
                    stack.push_back(inc.vertex);
                }
            }
        }
        ++next;
    }
    return label;
}

std::vector<VertexSet> components(const Graph & g, const VertexSet & removed)
{
    auto label = component_labels(g, removed);
    std::vector<VertexSet> parts;
    for (int v = 0; v < g.vertex_count(); ++v) {
        int l = label[static_cast<std::size_t>(v)];
        if (l < 0) {
            continue;
        }
        if (static_cast<std::size_t>(l) == parts.size()) {
            parts.emplace_back(g);
        }
        parts[static_cast<std::size_t>(l)].insert(v);
    }
    return parts;
}

std::vector<int> bfs_distances(const Graph & g, int source)
{
    if (!g.is_vertex(source)) {
        throw GraphError("invalid vertex " + std::to_string(source));
    }
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    std::deque<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (const auto & inc : g.neighbours(v)) {
            auto & d = dist[static_cast<std::size_t>(inc.vertex)];
            if (d < 0) {
                d = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(inc.vertex);
            }
        }
    }
    return dist;
}

} // namespace twcert
