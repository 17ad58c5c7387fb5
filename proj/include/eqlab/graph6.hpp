#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eqlab/graph.hpp"

namespace eqlab {

// Decodes one graph6 line. An optional ">>graph6<<" prefix and a trailing
// newline (LF or CRLF) are accepted. Padding bits in the last byte must be 0.
// Errors throw ParseError with the offending byte offset; orders above 64
// throw CapacityError.
Graph parse_graph6(std::string_view line);

// graph6 text without header or newline. Orders 0-62 use the one-byte size
// prefix, 63 and 64 the four-byte form.
std::string write_graph6(const Graph& g);

// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace eqlab
