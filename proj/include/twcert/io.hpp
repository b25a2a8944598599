#pragma once

#include "twcert/certificate.hpp"
#include "twcert/graph.hpp"
#include "twcert/metric.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace twcert {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GraphDocument {
    Graph graph;
    /// Weights from the `e` lines; edges without one get 1.
    LengthFn lengths;
};

/// Format:
///     graph <n> <m>
///     e <u> <v> [<num>/<den>]      (m lines, edge ids in order)
/// Blank lines and lines starting with '#' are skipped.
[[nodiscard]] GraphDocument parse_graph_document(std::istream & in);
/// Weights are written only when some edge length differs from 1.
void write_graph_document(std::ostream & out, const Graph & g, const LengthFn * lengths = nullptr);

/// One `l <edge-id> <num>/<den>` line per edge, each edge exactly once.
[[nodiscard]] LengthFn parse_length_document(std::istream & in, const Graph & g);
void write_length_document(std::ostream & out, const LengthFn & l);

/// {"flavor", "cycle": [v...], "generators": [[v...]...], "bound": "num/den"}
/// with vertex sequences listed once around (no repeated end vertex).
[[nodiscard]] nlohmann::json certificate_to_json(const Certificate & cert);
[[nodiscard]] Certificate certificate_from_json(const nlohmann::json & doc, const Graph & g);

} // namespace twcert
