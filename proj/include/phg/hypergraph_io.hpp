#pragma once

#include <stdexcept>
#include <string>

#include "phg/hypergraph.hpp"

namespace phg {

// Malformed hypergraph text: bad syntax, unknown keys, bad references.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text format:
//   { "vertices": ["a","b"],
//     "edges": [ { "on": [["a",0],["b",0]], "w": {"re":1.0,"im":0.0} } ] }
// Weights may alternatively be written as {"amp":r,"phase":phi}. Unknown
// keys are rejected. Round-trip is byte-stable for canonical hypergraphs.
std::string write_hypergraph_text(const Hypergraph& h);
Hypergraph parse_hypergraph_text(const std::string& text);

std::string read_file(const std::string& path);          // throws FormatError
void write_file(const std::string& path, const std::string& content);
Hypergraph load_hypergraph(const std::string& path);

}  // namespace phg
