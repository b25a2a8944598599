#include "twcert/cli.hpp"

#include "twcert/certificate.hpp"
#include "twcert/generators.hpp"
#include "twcert/io.hpp"
#include "twcert/lemmas.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace twcert {

namespace {

using Report = nlohmann::ordered_json;

struct Settings {
    std::uint64_t work_budget = WorkBudget::default_limit;
    int oracle_limit = default_oracle_limit;
    bool timing = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string path;
    std::string content;
};

Input read_input(const std::string & path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    }
    else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw UsageError("cannot open '" + path + "'");
        }
        buf << in.rdbuf();
    }
    return {path, buf.str()};
}

std::string digest(const std::string & bytes)
{
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

GraphDocument load_graph(const Input & in)
{
    std::istringstream ss(in.content);
    return parse_graph_document(ss);
}

LengthFn load_lengths(const Input & in, const Graph & g)
{
    std::istringstream ss(in.content);
    return parse_length_document(ss, g);
}

Certificate load_certificate(const Input & in, const Graph & g)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in.content);
    }
    catch (const nlohmann::json::exception & e) {
        throw ParseError(std::string("certificate JSON: ") + e.what());
    }
    return certificate_from_json(doc, g);
}

Report violation_json(const Violation & v)
{
    Report j;
    j["premise"] = to_string(v.premise);
    j["message"] = v.message;
    Report w = Report::object();
    if (v.residue) {
        w["edges"] = v.residue->members();
    }
    if (v.generator) {
        w["generator"] = *v.generator;
        w["length"] = v.generator_length->to_string();
    }
    if (v.geodesic) {
        w["a"] = v.geodesic->a;
        w["b"] = v.geodesic->b;
        w["arc"] = v.geodesic->arc.to_string();
        w["distance"] = v.geodesic->distance.to_string();
    }
    j["witness"] = std::move(w);
    return j;
}

Report base_report(const std::string & command)
{
    Report r;
    r["command"] = command;
    r["inputs"] = Report::object();
    r["verdict"] = nullptr;
    r["k"] = nullptr;
    r["violations"] = Report::array();
    r["timing"] = nullptr;
    return r;
}

std::vector<int> parse_id_list(const std::string & text)
{
    std::vector<int> ids;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ',');) {
        if (tok.empty()) {
            continue;
        }
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) {
                throw UsageError("bad vertex id '" + tok + "'");
            }
            ids.push_back(v);
        }
        catch (const std::logic_error &) {
            throw UsageError("bad vertex id '" + tok + "'");
        }
    }
    return ids;
}

void write_file(const std::string & path, const std::string & content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw UsageError("cannot write '" + path + "'");
    }
    out << content;
}

// verify -------------------------------------------------------------------

int cmd_verify(const std::string & graph_path, const std::string & cert_path, const std::string & length_path,
               const Settings & settings, Report & report)
{
    auto graph_in = read_input(graph_path);
    auto cert_in = read_input(cert_path);
    report["inputs"]["graph"] = digest(graph_in.content);
    report["inputs"]["certificate"] = digest(cert_in.content);

    auto doc = load_graph(graph_in);
    LengthFn lengths = doc.lengths;
    if (!length_path.empty()) {
        auto len_in = read_input(length_path);
        report["inputs"]["lengths"] = digest(len_in.content);
        lengths = load_lengths(len_in, doc.graph);
    }
    auto cert = load_certificate(cert_in, doc.graph);
    report["flavor"] = to_string(cert.flavor);

    VerificationResult result;
    try {
        result = verify_any(doc.graph, lengths, cert, settings.work_budget);
    }
    catch (const BudgetExhausted &) {
        throw;
    }
    catch (const std::invalid_argument & e) {
        throw UsageError(e.what());
    }

    for (const auto & v : result.violations) {
        report["violations"].push_back(violation_json(v));
    }
    if (result.verified) {
        report["verdict"] = "verified";
        report["k"] = result.verified->k();
        report["cycle_length"] = result.verified->cycle_length().to_string();
        report["max_generator_length"] = result.verified->max_generator_length().to_string();
        return exit_ok;
    }
    report["verdict"] = "violated";
    return exit_violation;
}

// gen ----------------------------------------------------------------------

struct Generated {
    Graph graph;
    std::optional<LengthFn> lengths;
    std::optional<Certificate> certificate;
};

Generated generate(const std::string & kind, int size, const std::string & lengths, std::int64_t subdivide)
{
    if (subdivide < 1) {
        throw UsageError("--subdivide must be at least 1");
    }
    if (subdivide != 1 && !(kind == "wall" && lengths == "corollary")) {
        throw UsageError("--subdivide applies to 'wall --lengths corollary' only");
    }
    try {
        if (kind == "grid") {
            if (!lengths.empty() && lengths != "intro") {
                throw UsageError("grid supports --lengths intro only");
            }
            auto grid = make_grid(size);
            if (lengths == "intro") {
                auto l = intro_grid_lengths(grid);
                Certificate cert{Flavor::rational_geodesic, grid.outer, grid.faces, Rational(8)};
                return {grid.graph, l, cert};
            }
            Certificate cert{Flavor::unit_precise, grid.outer, grid.faces, Rational(4)};
            return {grid.graph, std::nullopt, cert};
        }
        if (kind == "wheel") {
            if (!lengths.empty()) {
                throw UsageError("wheel takes no --lengths");
            }
            auto wheel = make_wheel(size);
            Certificate cert{Flavor::rational_geodesic, wheel.rim, wheel.triangles, Rational(3)};
            return {wheel.graph, std::nullopt, cert};
        }
        if (kind == "wall") {
            if (!lengths.empty() && lengths != "corollary") {
                throw UsageError("wall supports --lengths corollary only");
            }
            if (lengths.empty()) {
                return {make_wall(size).graph, std::nullopt, std::nullopt};
            }
            auto edge_count = make_wall(size).graph.edge_count();
            std::vector<std::int64_t> mult(static_cast<std::size_t>(edge_count), subdivide);
            auto wc = wall_certificate(size, mult);
            return {wc.graph, wc.lengths, wc.certificate};
        }
    }
    catch (const std::invalid_argument & e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown kind '" + kind + "'");
}

int cmd_gen(const std::string & kind, int size, const std::string & lengths, const std::string & prefix,
            std::int64_t subdivide, std::ostream & out, Report & report)
{
    auto gen = generate(kind, size, lengths, subdivide);
    std::ostringstream graph_doc;
    write_graph_document(graph_doc, gen.graph);
    if (prefix.empty()) {
        out << graph_doc.str();
        return exit_ok;
    }
    report["verdict"] = "written";
    report["inputs"]["kind"] = kind;
    report["inputs"]["size"] = size;
    report["vertices"] = gen.graph.vertex_count();
    report["edges"] = gen.graph.edge_count();
    Report files = Report::object();
    write_file(prefix + ".graph", graph_doc.str());
    files["graph"] = prefix + ".graph";
    if (gen.lengths) {
        std::ostringstream len_doc;
        write_length_document(len_doc, *gen.lengths);
        write_file(prefix + ".lengths", len_doc.str());
        files["lengths"] = prefix + ".lengths";
    }
    if (gen.certificate) {
        write_file(prefix + ".cert.json", certificate_to_json(*gen.certificate).dump(2) + "\n");
        files["certificate"] = prefix + ".cert.json";
    }
    report["files"] = std::move(files);
    return exit_ok;
}

// oracle -------------------------------------------------------------------

int cmd_oracle_tw(const std::string & graph_path, const Settings & settings, Report & report)
{
    auto in = read_input(graph_path);
    report["inputs"]["graph"] = digest(in.content);
    auto doc = load_graph(in);
    int tw = exact_treewidth(doc.graph, settings.oracle_limit);
    report["verdict"] = "computed";
    report["treewidth"] = tw;
    return exit_ok;
}

int cmd_oracle_separator(const std::string & graph_path, int k, const std::string & set_text,
                         const std::string & cycle_of, const Settings & settings, Report & report)
{
    auto in = read_input(graph_path);
    report["inputs"]["graph"] = digest(in.content);
    auto doc = load_graph(in);
    const auto & g = doc.graph;
    VertexSet A = VertexSet::full(g);
    if (!set_text.empty()) {
        A = VertexSet(g);
        for (int v : parse_id_list(set_text)) {
            if (!g.is_vertex(v)) {
                throw UsageError("vertex " + std::to_string(v) + " out of range");
            }
            A.insert(v);
        }
    }
    else if (!cycle_of.empty()) {
        auto cert_in = read_input(cycle_of);
        report["inputs"]["certificate"] = digest(cert_in.content);
        A = load_certificate(cert_in, g).cycle.vertex_set();
    }
    if (k < 0) {
        throw UsageError("--k must be nonnegative");
    }
    report["target"] = A.members();
    report["k"] = k;
    auto x = balanced_separator(g, A, k, settings.work_budget);
    if (x) {
        report["verdict"] = "found";
        report["separator"] = x->members();
        return exit_ok;
    }
    report["verdict"] = "none";
    report["separator"] = nullptr;
    return exit_violation;
}

int cmd_oracle_precise(const std::string & graph_path, const std::string & cert_path, int k,
                       const Settings & settings, Report & report)
{
    auto in = read_input(graph_path);
    auto cert_in = read_input(cert_path);
    report["inputs"]["graph"] = digest(in.content);
    report["inputs"]["certificate"] = digest(cert_in.content);
    auto doc = load_graph(in);
    auto cert = load_certificate(cert_in, doc.graph);
    if (!cert.bound.is_integer()) {
        throw UsageError("precise check needs an integer bound p");
    }
    if (k < 0) {
        throw UsageError("--k must be nonnegative");
    }
    report["k"] = k;
    auto check = check_precise_theorem(doc.graph, cert.cycle, cert.generators, static_cast<int>(cert.bound.num()), k,
                                       settings.work_budget);
    report["premises_hold"] = check.premises_hold;
    report["subsets_checked"] = check.subsets_checked;
    if (check.pass) {
        report["verdict"] = "pass";
        report["counterexample"] = nullptr;
        return exit_ok;
    }
    report["verdict"] = "counterexample";
    report["counterexample"] = check.counterexample->members();
    return exit_violation;
}

// search -------------------------------------------------------------------

int cmd_search(const std::string & graph_path, const std::string & bound_text, const std::string & length_path,
               const Settings & settings, Report & report)
{
    auto in = read_input(graph_path);
    report["inputs"]["graph"] = digest(in.content);
    auto doc = load_graph(in);
    LengthFn lengths = doc.lengths;
    if (!length_path.empty()) {
        auto len_in = read_input(length_path);
        report["inputs"]["lengths"] = digest(len_in.content);
        lengths = load_lengths(len_in, doc.graph);
    }
    Rational r;
    try {
        r = Rational::parse(bound_text);
    }
    catch (const std::exception & e) {
        throw UsageError(std::string("bound: ") + e.what());
    }
    if (!r.is_positive()) {
        throw UsageError("bound must be positive");
    }
    report["bound"] = r.to_string();
    auto cert = search_certificate(doc.graph, lengths, r, settings.work_budget);
    if (!cert) {
        report["verdict"] = "none";
        report["certificate"] = nullptr;
        return exit_ok;
    }
    auto verified = verify_certificate(doc.graph, lengths, *cert);
    report["verdict"] = "found";
    report["k"] = verified ? nlohmann::ordered_json(verified.verified->k()) : nlohmann::ordered_json(nullptr);
    report["cycle_length"] = cycle_length(lengths, cert->cycle).to_string();
    report["certificate"] = certificate_to_json(*cert);
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Verify algebraic tree-width certificates and run the desk-scale oracles", "twcert"};
    app.require_subcommand(1);

    Settings settings;
    app.add_option("--work-budget", settings.work_budget, "Step limit for exhaustive searches");
    app.add_option("--oracle-limit", settings.oracle_limit, "Vertex limit for exact tree-width");
    app.add_flag("--timing", settings.timing, "Add wall-clock timing to the report");

    std::string graph_path;
    std::string cert_path;
    std::string length_path;

    auto * verify = app.add_subcommand("verify", "Verify a certificate and report the tree-width bound");
    verify->fallthrough();
    verify->add_option("graph", graph_path, "Graph document ('-' for stdin)")->required();
    verify->add_option("certificate", cert_path, "Certificate JSON")->required();
    verify->add_option("--lengths", length_path, "Length document overriding the graph's weights");

    std::string kind;
    int size = 0;
    std::string gen_lengths;
    std::string prefix;
    std::int64_t subdivide = 1;
    auto * gen = app.add_subcommand("gen", "Generate a grid, wheel or wall");
    gen->fallthrough();
    gen->add_option("kind", kind, "grid | wheel | wall")->required()->check(CLI::IsMember({"grid", "wheel", "wall"}));
    gen->add_option("size", size, "Grid side, wheel rim length or wall parameter")->required();
    gen->add_option("--lengths", gen_lengths, "intro (grid) or corollary (wall)");
    gen->add_option("--out", prefix, "Write PREFIX.graph, PREFIX.lengths and PREFIX.cert.json");
    gen->add_option("--subdivide", subdivide, "Uniform branch-path length for the corollary wall");

    int k = 0;
    std::string set_text;
    std::string cycle_of;
    auto * oracle = app.add_subcommand("oracle", "Brute-force oracles");
    oracle->fallthrough();
    oracle->require_subcommand(1);
    auto * tw = oracle->add_subcommand("tw", "Exact tree-width");
    tw->fallthrough();
    tw->add_option("graph", graph_path)->required();
    auto * separator = oracle->add_subcommand("separator", "Balanced separator of order at most k");
    separator->fallthrough();
    separator->add_option("graph", graph_path)->required();
    separator->add_option("--k", k)->required();
    auto * set_opt = separator->add_option("--set", set_text, "Comma-separated target vertices (default: all)");
    separator->add_option("--cycle-of", cycle_of, "Use the cycle of this certificate as the target")->excludes(set_opt);
    auto * precise = oracle->add_subcommand("precise", "Check every X of order at most k against the cycle");
    precise->fallthrough();
    precise->add_option("graph", graph_path)->required();
    precise->add_option("certificate", cert_path)->required();
    precise->add_option("--k", k)->required();

    std::string bound_text;
    auto * search = app.add_subcommand("search", "Search for a certificate");
    search->fallthrough();
    search->add_option("graph", graph_path)->required();
    search->add_option("bound", bound_text, "Generator length bound r as num/den")->required();
    search->add_option("--lengths", length_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        err << "twcert: " << e.what() << '\n';
        return exit_usage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    if (oracle->parsed()) {
        command += " " + oracle->get_subcommands().front()->get_name();
    }
    Report report = base_report(command);
    const auto started = std::chrono::steady_clock::now();
    int code = exit_ok;
    try {
        if (verify->parsed()) {
            code = cmd_verify(graph_path, cert_path, length_path, settings, report);
        }
        else if (gen->parsed()) {
            code = cmd_gen(kind, size, gen_lengths, prefix, subdivide, out, report);
            if (prefix.empty()) {
                return code;
            }
        }
        else if (tw->parsed()) {
            code = cmd_oracle_tw(graph_path, settings, report);
        }
        else if (separator->parsed()) {
            code = cmd_oracle_separator(graph_path, k, set_text, cycle_of, settings, report);
        }
        else if (precise->parsed()) {
            code = cmd_oracle_precise(graph_path, cert_path, k, settings, report);
        }
        else if (search->parsed()) {
            code = cmd_search(graph_path, bound_text, length_path, settings, report);
        }
    }
    catch (const UsageError & e) {
        err << "twcert: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const ParseError & e) {
        err << "twcert: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const GraphError & e) {
        err << "twcert: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const BudgetExhausted & e) {
        err << "twcert: " << e.what() << '\n';
        report["verdict"] = "exhausted";
        out << report.dump(2) << '\n';
        return exit_exhausted;
    }
    catch (const OracleLimitExceeded & e) {
        err << "twcert: " << e.what() << '\n';
        report["verdict"] = "exhausted";
        out << report.dump(2) << '\n';
        return exit_exhausted;
    }
    catch (const std::overflow_error & e) {
        err << "twcert: " << e.what() << '\n';
        return exit_exhausted;
    }
    catch (const std::exception & e) {
        err << "twcert: internal error: " << e.what() << '\n';
        return exit_usage;
    }

    if (settings.timing) {
        auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
        report["timing"] = {{"elapsed_ms", elapsed.count()}};
    }
    out << report.dump(2) << '\n';
    return code;
}

} // namespace twcert
