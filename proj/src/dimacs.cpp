#include "indcut/dimacs.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace indcut {

Graph read_dimacs_graph(std::istream& in, DimacsStats* stats) {
    int n = -1;
    long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<VertexSet> seen;
    int dupes = 0;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.empty() || tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw parse_error(line_no, "duplicate problem line");
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0 || declared_m < 0)
                throw parse_error(line_no, "malformed header, expected 'p edge <n> <m>'");
            seen.assign(n, VertexSet(n));
        } else if (tag == "e") {
            if (n < 0) throw parse_error(line_no, "edge before problem line");
            int u, v;
            if (!(ls >> u >> v))
                throw parse_error(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(line_no, "vertex id out of range 1.." + std::to_string(n));
            if (u == v)
                throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
            --u, --v;
            if (seen[u].contains(v)) {
                ++dupes;
                continue;
            }
            seen[u].add(v);
            seen[v].add(u);
            edges.emplace_back(u, v);
        } else {
            throw parse_error(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (n < 0) throw parse_error(line_no, "missing problem line");
    if (stats) stats->duplicate_edges = dupes;
    return Graph(n, edges);
}

void write_dimacs_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

} // namespace indcut
