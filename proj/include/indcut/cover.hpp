#ifndef INDCUT_COVER_HPP
#define INDCUT_COVER_HPP

#include <vector>

#include "indcut/graph.hpp"

namespace indcut {

// p disjoint leaf edges plus a center adjacent to every leaf.
struct Windmill {
    int center = -1;
    std::vector<std::pair<int, int>> pairs; // leaf edges, each stored (lo, hi)

    int num_pairs() const { return static_cast<int>(pairs.size()); }
    VertexSet vertex_set(int universe) const;
};

enum class CoverMethod { windmill, dense };

// A family of vertex sets of solid subgraphs whose union touches every
// triangle of the host graph in at least two vertices.
struct QuasiCover {
    CoverMethod method = CoverMethod::windmill;
    std::vector<VertexSet> groups;
    std::vector<Triangle> witnesses; // one triangle per group, inside the group

    int size() const { return static_cast<int>(groups.size()); }
    VertexSet covered_vertices(int universe) const;
};

struct WindmillBuildStats {
    int replacements = 0;       // split-into-two-triangles rule applications
    int max_steps_between = 0;  // growth steps between consecutive replacements
};

// Maintains a vertex-disjoint windmill collection: greedy growth (new
// disjoint triangles, pendant pairs attached to centers) alternating with
// restructuring rules until every triangle of g has at least two covered
// vertices. Deterministic: lexicographic scan order throughout.
std::vector<Windmill> build_windmill_collection(const Graph& g,
                                                WindmillBuildStats* stats = nullptr);

// Cover by the triangles of the final windmill collection. With Delta the
// maximum degree of g, its size is at most (1/2 - alpha_delta(Delta)) * n.
QuasiCover windmill_cover(const Graph& g);

// Cover by the vertex sets of the merge classes of triangles linked via
// shared edges. On graphs where every two adjacent vertices with a common
// neighbor have at least l common neighbors, its size is at most
// 2m / ((l+1)(l+2)).
QuasiCover dense_cover(const Graph& g);

// Computes both covers and returns the smaller; ties go to windmill.
QuasiCover auto_cover(const Graph& g);

// True iff every triangle of g has at least two vertices in the union of
// the cover's groups.
bool check_quasi_cover(const Graph& g, const QuasiCover& c);

// Degree-dependent savings exponent 1 / (2 + 4*floor(Delta/2)).
double alpha_delta(int max_degree);

// Size ceiling (1/2 - alpha_delta(Delta)) * n for the windmill cover.
double windmill_cover_bound(int n, int max_degree);

} // namespace indcut

#endif
