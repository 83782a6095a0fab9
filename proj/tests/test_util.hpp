#ifndef INDCUT_TESTS_TEST_UTIL_HPP
#define INDCUT_TESTS_TEST_UTIL_HPP

#include <sstream>
#include <vector>

#include "indcut/graph.hpp"

namespace test_util {

inline indcut::Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    return indcut::Graph(n, edges);
}

inline indcut::Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i - 1, i);
    return {n, e};
}

inline indcut::Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return {n, e};
}

inline indcut::Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return {n, e};
}

// Two triangles {0,1,2}, {3,4,5} plus the matching 0-3, 1-4, 2-5.
inline indcut::Graph prism() {
    return {6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}};
}

// Two triangles sharing vertex 0; equivalently the 2-windmill with
// center 0 and leaf pairs {1,2}, {3,4}.
inline indcut::Graph bowtie() {
    return {5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}};
}

// Cubic triple check of all triples, for cross-checking fast enumeration.
inline std::vector<indcut::Triangle> naive_triangles(const indcut::Graph& g) {
    std::vector<indcut::Triangle> out;
    for (int a = 0; a < g.order(); ++a)
        for (int b = a + 1; b < g.order(); ++b)
            for (int c = b + 1; c < g.order(); ++c)
                if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))
                    out.emplace_back(a, b, c);
    return out;
}

} // namespace test_util

#endif
