#include "twcert/io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

namespace twcert {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream & in)
{
    std::vector<Line> lines;
    std::string text;
    int number = 0;
    while (std::getline(in, text)) {
        ++number;
        std::istringstream ss(text);
        std::vector<std::string> tokens;
        for (std::string tok; ss >> tok;) {
            tokens.push_back(tok);
        }
        if (tokens.empty() || tokens.front().starts_with('#')) {
            continue;
        }
        lines.push_back({number, std::move(tokens)});
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string & what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

int parse_count(const std::string & tok, int line)
{
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0 || v > 100'000'000) {
            fail(line, "bad integer '" + tok + "'");
        }
        return static_cast<int>(v);
    }
    catch (const std::logic_error &) {
        fail(line, "bad integer '" + tok + "'");
    }
}

Rational parse_length(const std::string & tok, int line)
{
    Rational r;
    try {
        r = Rational::parse(tok);
    }
    catch (const std::exception & e) {
        fail(line, e.what());
    }
    if (!r.is_positive()) {
        fail(line, "length " + tok + " is not positive");
    }
    return r;
}

std::vector<int> vertex_sequence(const Cycle & c)
{
    return {c.vertices().begin(), c.vertices().end()};
}

Cycle cycle_from_json(const nlohmann::json & seq, const Graph & g, const std::string & what)
{
    if (!seq.is_array()) {
        throw ParseError(what + " must be an array of vertex ids");
    }
    std::vector<int> vertices;
    for (const auto & v : seq) {
        if (!v.is_number_integer()) {
            throw ParseError(what + " contains a non-integer vertex");
        }
        vertices.push_back(v.get<int>());
    }
    try {
        return Cycle::from_vertices(g, vertices);
    }
    catch (const GraphError & e) {
        throw ParseError(what + ": " + e.what());
    }
}

} // namespace

GraphDocument parse_graph_document(std::istream & in)
{
    auto lines = tokenize(in);
    if (lines.empty()) {
        throw ParseError("empty graph document");
    }
    const auto & header = lines.front();
    if (header.tokens.size() != 3 || header.tokens[0] != "graph") {
        fail(header.number, "expected 'graph <n> <m>'");
    }
    int n = parse_count(header.tokens[1], header.number);
    int m = parse_count(header.tokens[2], header.number);
    if (static_cast<int>(lines.size()) - 1 != m) {
        throw ParseError("header announces " + std::to_string(m) + " edges, found "
                         + std::to_string(lines.size() - 1));
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<Rational> weights;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto & line = lines[k];
        const auto & t = line.tokens;
        if (t[0] != "e" || (t.size() != 3 && t.size() != 4)) {
            fail(line.number, "expected 'e <u> <v> [<num>/<den>]'");
        }
        int u = parse_count(t[1], line.number);
        int v = parse_count(t[2], line.number);
        if (u >= n || v >= n) {
            fail(line.number, "vertex id out of range");
        }
        edges.emplace_back(u, v);
        weights.push_back(t.size() == 4 ? parse_length(t[3], line.number) : Rational(1));
    }
    try {
        Graph g(n, std::move(edges));
        LengthFn l(g, std::move(weights));
        return {std::move(g), std::move(l)};
    }
    catch (const GraphError & e) {
        throw ParseError(e.what());
    }
}

void write_graph_document(std::ostream & out, const Graph & g, const LengthFn * lengths)
{
    const bool weighted = lengths != nullptr && !lengths->is_unit();
    out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
        out << "e " << g.edge(e).u << ' ' << g.edge(e).v;
        if (weighted) {
            out << ' ' << (*lengths)[e].to_string();
        }
        out << '\n';
    }
}

LengthFn parse_length_document(std::istream & in, const Graph & g)
{
    std::vector<std::optional<Rational>> values(static_cast<std::size_t>(g.edge_count()));
    for (const auto & line : tokenize(in)) {
        const auto & t = line.tokens;
        if (t.size() != 3 || t[0] != "l") {
            fail(line.number, "expected 'l <edge-id> <num>/<den>'");
        }
        int e = parse_count(t[1], line.number);
        if (e >= g.edge_count()) {
            fail(line.number, "edge id " + t[1] + " out of range");
        }
        auto & slot = values[static_cast<std::size_t>(e)];
        if (slot) {
            fail(line.number, "edge " + t[1] + " given twice");
        }
        slot = parse_length(t[2], line.number);
    }
    std::vector<Rational> out;
    for (std::size_t e = 0; e < values.size(); ++e) {
        if (!values[e]) {
            throw ParseError("no length for edge " + std::to_string(e));
        }
        out.push_back(*values[e]);
    }
    return {g, std::move(out)};
}

void write_length_document(std::ostream & out, const LengthFn & l)
{
    for (int e = 0; e < l.size(); ++e) {
        out << "l " << e << ' ' << l[e].to_string() << '\n';
    }
}

nlohmann::json certificate_to_json(const Certificate & cert)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto & d : cert.generators) {
        gens.push_back(vertex_sequence(d));
    }
    return {
        {"flavor", to_string(cert.flavor)},
        {"cycle", vertex_sequence(cert.cycle)},
        {"generators", std::move(gens)},
        {"bound", cert.bound.to_string()},
    };
}

Certificate certificate_from_json(const nlohmann::json & doc, const Graph & g)
{
    if (!doc.is_object()) {
        throw ParseError("certificate must be a JSON object");
    }
    for (const char * key : {"flavor", "cycle", "bound"}) {
        if (!doc.contains(key)) {
            throw ParseError(std::string("certificate lacks '") + key + "'");
        }
    }
    Flavor flavor;
    try {
        flavor = flavor_from_string(doc.at("flavor").get<std::string>());
    }
    catch (const std::exception & e) {
        throw ParseError(e.what());
    }

    Rational bound;
    const auto & b = doc.at("bound");
    try {
        if (b.is_string()) {
            bound = Rational::parse(b.get<std::string>());
        }
        else if (b.is_number_integer()) {
            bound = Rational(b.get<std::int64_t>());
        }
        else {
            throw ParseError("bound must be a \"num/den\" string");
        }
    }
    catch (const ParseError &) {
        throw;
    }
    catch (const std::exception & e) {
        throw ParseError(std::string("bound: ") + e.what());
    }
    if (!bound.is_positive()) {
        throw ParseError("bound must be positive");
    }

    Cycle cycle = cycle_from_json(doc.at("cycle"), g, "cycle");
    std::vector<Cycle> generators;
    if (doc.contains("generators")) {
        const auto & gens = doc.at("generators");
        if (!gens.is_array()) {
            throw ParseError("generators must be an array");
        }
        for (std::size_t i = 0; i < gens.size(); ++i) {
            generators.push_back(cycle_from_json(gens[i], g, "generator " + std::to_string(i)));
        }
    }
    else if (flavor != Flavor::cyclespace) {
        throw ParseError("certificate lacks 'generators'");
    }
    return Certificate{flavor, std::move(cycle), std::move(generators), bound};
}

} // namespace twcert
