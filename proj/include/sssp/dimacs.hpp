#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sssp/graph.hpp"

namespace sssp {

/// Malformed DIMACS input; `line` is the 1-based offending line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads a DIMACS shortest-path graph ("c" comments, one "p sp <n> <m>"
/// line, then exactly m "a <u> <v> <w>" lines with 1-based vertex ids).
/// Vertex ids are shifted to 0-based. Throws ParseError on malformed input.
Graph parse_dimacs_gr(std::istream& in);
Graph load_dimacs_gr(const std::string& path);

/// Writes integer-mode `g` in the same format, arcs in forward-star order,
/// "\n" line endings. Throws std::invalid_argument for real-mode graphs.
void write_dimacs_gr(const Graph& g, std::ostream& out);
std::string dimacs_gr_string(const Graph& g);
void save_dimacs_gr(const Graph& g, const std::string& path);

} // namespace sssp
