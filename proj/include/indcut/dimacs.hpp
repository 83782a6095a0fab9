#ifndef INDCUT_DIMACS_HPP
#define INDCUT_DIMACS_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "indcut/graph.hpp"

namespace indcut {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

struct DimacsStats {
    int duplicate_edges = 0;
};

// DIMACS edge format: comment lines "c ...", one header "p edge <n> <m>",
// edge lines "e <u> <v>" with 1-based ids. Vertex ids are shifted to
// 0-based on parse. Duplicate edges are collapsed and counted in stats.
Graph read_dimacs_graph(std::istream& in, DimacsStats* stats = nullptr);

// Writes edges with u < v, ascending, 1-based.
void write_dimacs_graph(std::ostream& out, const Graph& g);

} // namespace indcut

#endif
