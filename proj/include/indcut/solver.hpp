#ifndef INDCUT_SOLVER_HPP
#define INDCUT_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "indcut/cover.hpp"
#include "indcut/graph.hpp"
#include "indcut/twosat.hpp"

namespace indcut {

// True iff s is independent in g and g - s has at least two components.
bool verify_cut(const Graph& g, const VertexSet& s);

struct PreprocessOutcome {
    enum class Kind { trivial_yes, trivial_no, non_trivial };
    enum class Reason { disconnected, cut_vertex, triangle_free_vertex, too_small, none };

    Kind kind = Kind::non_trivial;
    Reason reason = Reason::none;
    VertexSet certificate; // for trivial_yes, passes verify_cut
};

// Easy-answer screens, applied in a fixed order: disconnected graph,
// too-small graph, articulation point, vertex in no triangle. A graph
// that survives all four is 2-connected with every vertex in a triangle.
PreprocessOutcome preprocess(const Graph& g);

const char* reason_name(PreprocessOutcome::Reason r);

// For every vertex outside the cover's union, its lexicographically least
// triangle. Each such triangle has exactly one vertex off the cover.
std::map<int, Triangle> assign_triangles(const Graph& g, const QuasiCover& cover);

// One guessed split of the cover groups, fully classified: I is the
// overlap of the two sides, L and R the side-exclusive vertices, M the
// leftover vertices of middle triangles. The 2-SAT formula has one
// variable per component of the bipartite crossing graph on L and R.
struct PartitionContext {
    uint64_t mask = 0;
    VertexSet I, L, R, M;
    int num_components = 0;          // t
    std::vector<int> component_of;   // per vertex; -1 outside L and R
    std::vector<VertexSet> m_components;
    TwoSatFormula formula;
};

// Null when the two sides' overlap is not independent (the split is
// rejected before any construction).
std::optional<PartitionContext> build_partition_context(
    const Graph& g, const QuasiCover& cover, const std::map<int, Triangle>& fixed,
    uint64_t mask);

// Decides one guessed split; returns a verified independent cut or null.
// mask bit i set means cover group i belongs to the left side; both sides
// must be non-empty.
std::optional<VertexSet> solve_partition(const Graph& g, const QuasiCover& cover,
                                         const std::map<int, Triangle>& fixed,
                                         uint64_t mask);

enum class Strategy { windmill, dense, auto_select, brute };

struct SolveOptions {
    Strategy strategy = Strategy::auto_select;
    int threads = 1;     // 1 = serial reference loop; 0 = all available
    int brute_max_n = 26;
};

struct SolveStats {
    uint64_t partitions_tried = 0;
    uint64_t twosat_solves = 0;
    double wall_ms = 0.0;
    int64_t winning_mask = -1;
    int cover_size = 0;
    std::optional<CoverMethod> cover_method;
    int threads = 1;
};

struct Verdict {
    bool has_cut = false;
    std::optional<VertexSet> certificate; // present iff has_cut; passes verify_cut
    std::string reason;
    SolveStats stats;
};

// Full decision procedure: preprocess, build a cover, enumerate splits
// with group 0 pinned to the left side (2^(k-1) - 1 masks), return the
// first verified cut or report exhaustion. With threads != 1 the mask
// loop runs under OpenMP; the decision bit is schedule-independent, the
// certificate may come from any qualifying mask.
Verdict solve(const Graph& g, const SolveOptions& opts = {});

// Enumerates independent subsets in ascending bit-pattern order and
// returns the first whose removal disconnects the graph. Refuses graphs
// larger than max_n.
Verdict brute_force(const Graph& g, int max_n = 26);

// One-line JSON rendering with 1-based certificate ids.
std::string verdict_to_json(const Verdict& v);

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

} // namespace indcut

#endif
