#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fallcolor/errors.hpp"
#include "fallcolor/graph.hpp"

namespace fallcolor {

class Graph6Error : public Error {
public:
    enum class Kind {
        malformed_length, // bad or truncated size prefix / body shorter than required
        invalid_char,     // byte outside the printable graph6 range [63, 126]
        trailing_garbage, // extra bytes after the complete encoding
        padding_bit,      // a set bit inside the zero padding
        unsupported_size, // n = 0 or n beyond the 4-byte form (n > 258047)
    };

    Graph6Error(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Parse a header-less graph6 line (strict: exact length, zero padding).
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, upper-triangle bit order, zero padding.
std::string to_graph6(const Graph& g);

/// Graphviz DOT text; labels, when given, must have one entry per vertex.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

} // namespace fallcolor
