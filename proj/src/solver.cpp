#include "indcut/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indcut {

bool verify_cut(const Graph& g, const VertexSet& s) {
    return is_independent(g, s) && components(g, s).size() >= 2;
}

const char* reason_name(PreprocessOutcome::Reason r) {
    switch (r) {
        case PreprocessOutcome::Reason::disconnected: return "disconnected";
        case PreprocessOutcome::Reason::cut_vertex: return "cut-vertex";
        case PreprocessOutcome::Reason::triangle_free_vertex: return "triangle-free-vertex";
        case PreprocessOutcome::Reason::too_small: return "too-small";
        case PreprocessOutcome::Reason::none: return "none";
    }
    return "none";
}

PreprocessOutcome preprocess(const Graph& g) {
    const int n = g.order();
    PreprocessOutcome out;

    if (components(g).size() >= 2) {
        out.kind = PreprocessOutcome::Kind::trivial_yes;
        out.reason = PreprocessOutcome::Reason::disconnected;
        out.certificate = VertexSet(n);
        return out;
    }
    if (n <= 2) {
        // Removing an independent set cannot leave two components here.
        out.kind = PreprocessOutcome::Kind::trivial_no;
        out.reason = PreprocessOutcome::Reason::too_small;
        return out;
    }
    if (VertexSet cuts = cut_vertices(g); !cuts.empty()) {
        out.kind = PreprocessOutcome::Kind::trivial_yes;
        out.reason = PreprocessOutcome::Reason::cut_vertex;
        out.certificate = VertexSet::of(n, {cuts.first()});
        return out;
    }
    if (VertexSet lonely = vertices_without_triangle(g); !lonely.empty()) {
        // g is 2-connected, so the neighborhood of a triangle-free vertex
        // is an independent cut.
        out.kind = PreprocessOutcome::Kind::trivial_yes;
        out.reason = PreprocessOutcome::Reason::triangle_free_vertex;
        out.certificate = g.neighbor_set(lonely.first());
        return out;
    }
    return out;
}

std::map<int, Triangle> assign_triangles(const Graph& g, const QuasiCover& cover) {
    const VertexSet covered = cover.covered_vertices(g.order());
    std::map<int, Triangle> fixed;
    for (const Triangle& t : triangles(g)) {
        for (int v : t.v) {
            if (covered.contains(v) || fixed.count(v)) continue;
            int hits = covered.contains(t.v[0]) + covered.contains(t.v[1]) +
                       covered.contains(t.v[2]);
            detail::require(hits == 2,
                            "fixed triangle must have exactly one vertex off the cover");
            fixed.emplace(v, t);
        }
    }
    for (int v = 0; v < g.order(); ++v)
        detail::require(covered.contains(v) || fixed.count(v),
                        "uncovered vertex lies in no triangle");
    return fixed;
}

namespace {

uint64_t full_mask(int k) {
    return k >= 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1;
}

} // namespace

std::optional<PartitionContext> build_partition_context(
    const Graph& g, const QuasiCover& cover, const std::map<int, Triangle>& fixed,
    uint64_t mask) {
    const int n = g.order();
    const int k = cover.size();
    detail::require(mask != 0 && (mask & full_mask(k)) != full_mask(k) &&
                        (mask & ~full_mask(k)) == 0,
                    "partition mask must leave both sides non-empty");

    VertexSet left_union(n), right_union(n);
    for (int i = 0; i < k; ++i)
        ((mask >> i) & 1 ? left_union : right_union) |= cover.groups[i];

    VertexSet overlap = left_union & right_union;
    if (!is_independent(g, overlap)) return std::nullopt;

    PartitionContext ctx;
    ctx.mask = mask;
    ctx.I = overlap;
    ctx.L = left_union - right_union;
    ctx.R = right_union - left_union;
    ctx.M = VertexSet(n);

    // Sort each fixed triangle to a side: both covered vertices left, both
    // right, or one on each exclusive side (then the free vertex is middle).
    for (const auto& [v, t] : fixed) {
        int a = t.v[0] == v ? t.v[1] : t.v[0];
        int b = t.v[2] == v ? t.v[1] : t.v[2];
        const int in_left = left_union.contains(a) + left_union.contains(b);
        const int in_right = right_union.contains(a) + right_union.contains(b);
        if (in_left == 2) {
            ctx.L.add(v);
        } else if (in_right == 2) {
            ctx.R.add(v);
        } else {
            detail::require(in_left == 1 && in_right == 1,
                            "fixed triangle classification fell through");
            ctx.M.add(v);
        }
    }
    detail::require(ctx.L.count() + ctx.R.count() + ctx.I.count() + ctx.M.count() == n,
                    "partition context must split the whole vertex set");

    // Components of the bipartite crossing graph on L and R, indexed in
    // order of smallest member.
    ctx.component_of.assign(n, -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        const bool s_left = ctx.L.contains(s);
        if ((!s_left && !ctx.R.contains(s)) || ctx.component_of[s] != -1) continue;
        const int id = ctx.num_components++;
        ctx.component_of[s] = id;
        queue.assign(1, s);
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            const bool u_left = ctx.L.contains(u);
            for (int w : g.neighbors(u)) {
                const bool crossing = u_left ? ctx.R.contains(w) : ctx.L.contains(w);
                if (!crossing || ctx.component_of[w] != -1) continue;
                ctx.component_of[w] = id;
                queue.push_back(w);
            }
        }
    }

    ctx.m_components = components(g, ctx.M.complement());

    // Clause families. Sets keep emission order deterministic and drop
    // duplicates.
    const int t_comps = ctx.num_components;
    std::vector<char> left_touches_overlap(t_comps, 0), right_touches_overlap(t_comps, 0);
    std::set<std::pair<int, int>> left_edges, right_edges, middle_links;

    std::vector<int> m_comp_of(n, -1);
    for (size_t q = 0; q < ctx.m_components.size(); ++q)
        for (int v : ctx.m_components[q]) m_comp_of[v] = static_cast<int>(q);

    enum class Side { left, right, overlap, middle };
    auto side_of = [&](int v) {
        if (ctx.L.contains(v)) return Side::left;
        if (ctx.R.contains(v)) return Side::right;
        if (ctx.I.contains(v)) return Side::overlap;
        return Side::middle;
    };

    std::vector<std::set<int>> m_left_neighbors(ctx.m_components.size()),
        m_right_neighbors(ctx.m_components.size());

    for (int u = 0; u < n; ++u) {
        const Side su = side_of(u);
        for (int w : g.neighbors(u)) {
            if (w <= u) continue;
            const Side sw = side_of(w);
            Side a = su, b = sw;
            int x = u, y = w;
            if (static_cast<int>(a) > static_cast<int>(b)) {
                std::swap(a, b);
                std::swap(x, y);
            }
            if (a == Side::left && b == Side::left) {
                auto [i, j] = std::minmax(ctx.component_of[x], ctx.component_of[y]);
                left_edges.insert({i, j});
            } else if (a == Side::right && b == Side::right) {
                auto [i, j] = std::minmax(ctx.component_of[x], ctx.component_of[y]);
                right_edges.insert({i, j});
            } else if (a == Side::left && b == Side::overlap) {
                left_touches_overlap[ctx.component_of[x]] = 1;
            } else if (a == Side::right && b == Side::overlap) {
                right_touches_overlap[ctx.component_of[x]] = 1;
            } else if (a == Side::left && b == Side::middle) {
                m_left_neighbors[m_comp_of[y]].insert(ctx.component_of[x]);
            } else if (a == Side::right && b == Side::middle) {
                m_right_neighbors[m_comp_of[y]].insert(ctx.component_of[x]);
            } else if (a == Side::left && b == Side::right) {
                detail::require(ctx.component_of[x] == ctx.component_of[y],
                                "crossing edge must stay within one component");
            } else {
                detail::require(!(a == Side::overlap && b == Side::overlap),
                                "independent overlap cannot contain an edge");
            }
        }
    }

    TwoSatFormula& f = ctx.formula;
    f.num_vars = t_comps;
    for (int i = 0; i < t_comps; ++i)
        if (left_touches_overlap[i]) f.add_unit(pos(i));
    for (int i = 0; i < t_comps; ++i)
        if (right_touches_overlap[i]) f.add_unit(neg(i));
    for (auto [i, j] : left_edges)
        i == j ? f.add_unit(pos(i)) : f.add(pos(i), pos(j));
    for (auto [i, j] : right_edges)
        i == j ? f.add_unit(neg(i)) : f.add(neg(i), neg(j));
    for (size_t q = 0; q < ctx.m_components.size(); ++q)
        for (int i : m_left_neighbors[q])
            for (int j : m_right_neighbors[q])
                if (i != j) middle_links.insert({i, j});
    for (auto [i, j] : middle_links) f.add(neg(i), pos(j));

    return ctx;
}

namespace {

// S* = I plus every left part assigned false and right part assigned true.
VertexSet extract_cut(const Graph& g, const PartitionContext& ctx, const Assignment& a) {
    VertexSet s = ctx.I;
    for (int v : ctx.L)
        if (!a[ctx.component_of[v]]) s.add(v);
    for (int v : ctx.R)
        if (a[ctx.component_of[v]]) s.add(v);
    detail::require(verify_cut(g, s),
                    "satisfying assignment did not yield an independent cut");
    return s;
}

} // namespace

std::optional<VertexSet> solve_partition(const Graph& g, const QuasiCover& cover,
                                         const std::map<int, Triangle>& fixed,
                                         uint64_t mask) {
    auto ctx = build_partition_context(g, cover, fixed, mask);
    if (!ctx) return std::nullopt;
    auto assignment = solve(ctx->formula);
    if (!assignment) return std::nullopt;
    return extract_cut(g, *ctx, *assignment);
}

namespace {

struct MaskLoopResult {
    bool found = false;
    uint64_t winning_mask = 0;
    VertexSet certificate;
    uint64_t tried = 0;
    uint64_t twosat_solves = 0;
};

MaskLoopResult run_masks_serial(const Graph& g, const QuasiCover& cover,
                                const std::map<int, Triangle>& fixed, uint64_t total) {
    MaskLoopResult res;
    for (uint64_t j = 0; j < total; ++j) {
        const uint64_t mask = (j << 1) | 1;
        ++res.tried;
        auto ctx = build_partition_context(g, cover, fixed, mask);
        if (!ctx) continue;
        ++res.twosat_solves;
        if (auto assignment = solve(ctx->formula)) {
            res.found = true;
            res.winning_mask = mask;
            res.certificate = extract_cut(g, *ctx, *assignment);
            return res;
        }
    }
    return res;
}

#ifdef _OPENMP
MaskLoopResult run_masks_parallel(const Graph& g, const QuasiCover& cover,
                                  const std::map<int, Triangle>& fixed, uint64_t total,
                                  int threads) {
    MaskLoopResult res;
    std::atomic<bool> found{false};
    uint64_t tried = 0, solves = 0;
    if (threads <= 0) threads = omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 16) num_threads(threads) \
    reduction(+ : tried, solves)
    for (long long j = 0; j < static_cast<long long>(total); ++j) {
        if (found.load(std::memory_order_relaxed)) continue;
        const uint64_t mask = (static_cast<uint64_t>(j) << 1) | 1;
        ++tried;
        auto ctx = build_partition_context(g, cover, fixed, mask);
        if (!ctx) continue;
        ++solves;
        if (auto assignment = solve(ctx->formula)) {
            VertexSet cert = extract_cut(g, *ctx, *assignment);
#pragma omp critical(indcut_mask_hit)
            {
                if (!found.load(std::memory_order_relaxed)) {
                    found.store(true, std::memory_order_relaxed);
                    res.winning_mask = mask;
                    res.certificate = std::move(cert);
                }
            }
        }
    }
    res.found = found.load();
    res.tried = tried;
    res.twosat_solves = solves;
    return res;
}
#endif

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

} // namespace

Verdict solve(const Graph& g, const SolveOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    verdict.stats.threads = opts.threads;

    if (opts.strategy == Strategy::brute) {
        verdict = brute_force(g, opts.brute_max_n);
        verdict.stats.threads = opts.threads;
        verdict.stats.wall_ms = elapsed_ms(start);
        return verdict;
    }

    const PreprocessOutcome pre = preprocess(g);
    if (pre.kind == PreprocessOutcome::Kind::trivial_yes) {
        detail::require(verify_cut(g, pre.certificate),
                        "preprocessing certificate failed verification");
        verdict.has_cut = true;
        verdict.certificate = pre.certificate;
        verdict.reason = reason_name(pre.reason);
        verdict.stats.wall_ms = elapsed_ms(start);
        return verdict;
    }
    if (pre.kind == PreprocessOutcome::Kind::trivial_no) {
        verdict.reason = reason_name(pre.reason);
        verdict.stats.wall_ms = elapsed_ms(start);
        return verdict;
    }

    QuasiCover cover;
    switch (opts.strategy) {
        case Strategy::windmill: cover = windmill_cover(g); break;
        case Strategy::dense: cover = dense_cover(g); break;
        default: cover = auto_cover(g); break;
    }
    detail::require(check_quasi_cover(g, cover),
                    "cover construction violated the quasi-cover property");
    verdict.stats.cover_size = cover.size();
    verdict.stats.cover_method = cover.method;

    const int k = cover.size();
    if (k <= 1) {
        // A cut would place cover groups in at least two components.
        verdict.reason = "exhausted";
        verdict.stats.wall_ms = elapsed_ms(start);
        return verdict;
    }
    if (k > 63)
        throw std::invalid_argument("quasi-cover has " + std::to_string(k) +
                                    " groups; refusing to enumerate 2^" +
                                    std::to_string(k - 1) + " partitions");

    const std::map<int, Triangle> fixed = assign_triangles(g, cover);
    const uint64_t total = (uint64_t{1} << (k - 1)) - 1;

    MaskLoopResult res;
#ifdef _OPENMP
    if (opts.threads != 1)
        res = run_masks_parallel(g, cover, fixed, total, opts.threads);
    else
        res = run_masks_serial(g, cover, fixed, total);
#else
    res = run_masks_serial(g, cover, fixed, total);
#endif

    verdict.stats.partitions_tried = res.tried;
    verdict.stats.twosat_solves = res.twosat_solves;
    if (res.found) {
        verdict.has_cut = true;
        verdict.certificate = res.certificate;
        verdict.stats.winning_mask = static_cast<int64_t>(res.winning_mask);
        verdict.reason = "partition:" + std::to_string(res.winning_mask);
    } else {
        verdict.reason = "exhausted";
    }
    verdict.stats.wall_ms = elapsed_ms(start);
    return verdict;
}

Verdict brute_force(const Graph& g, int max_n) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.order();
    const int limit = std::min(max_n, 62);
    if (n > limit)
        throw std::invalid_argument("brute force limited to " + std::to_string(limit) +
                                    " vertices, got " + std::to_string(n));

    std::vector<uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) adj[u] |= uint64_t{1} << v;
    const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    Verdict verdict;
    for (uint64_t s = 0; s <= all; ++s) {
        bool independent = true;
        for (uint64_t rest = s; rest && independent;) {
            int v = __builtin_ctzll(rest);
            rest &= rest - 1;
            independent = (adj[v] & s) == 0;
        }
        if (!independent) continue;

        const uint64_t remaining = all & ~s;
        if (remaining == 0) continue;
        uint64_t visited = uint64_t{1} << __builtin_ctzll(remaining);
        for (;;) {
            uint64_t frontier = 0;
            for (uint64_t rest = visited; rest;) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                frontier |= adj[v];
            }
            frontier &= remaining & ~visited;
            if (!frontier) break;
            visited |= frontier;
        }
        if (visited != remaining) {
            VertexSet cert(n);
            for (uint64_t rest = s; rest;) {
                int v = __builtin_ctzll(rest);
                rest &= rest - 1;
                cert.add(v);
            }
            detail::require(verify_cut(g, cert), "brute-force cut failed verification");
            verdict.has_cut = true;
            verdict.certificate = cert;
            verdict.reason = "brute";
            verdict.stats.wall_ms = elapsed_ms(start);
            return verdict;
        }
    }
    verdict.reason = "exhausted";
    verdict.stats.wall_ms = elapsed_ms(start);
    return verdict;
}

std::string verdict_to_json(const Verdict& v) {
    nlohmann::json j;
    j["has_cut"] = v.has_cut;
    if (v.certificate) {
        auto ids = nlohmann::json::array();
        for (int x : *v.certificate) ids.push_back(x + 1);
        j["certificate"] = ids;
    } else {
        j["certificate"] = nullptr;
    }
    j["reason"] = v.reason;
    nlohmann::json stats;
    stats["partitions"] = v.stats.partitions_tried;
    stats["twosat_solves"] = v.stats.twosat_solves;
    stats["wall_ms"] = v.stats.wall_ms;
    stats["cover_size"] = v.stats.cover_size;
    if (v.stats.cover_method)
        stats["cover_method"] =
            *v.stats.cover_method == CoverMethod::windmill ? "windmill" : "dense";
    else
        stats["cover_method"] = nullptr;
    if (v.stats.winning_mask >= 0)
        stats["winning_mask"] = v.stats.winning_mask;
    else
        stats["winning_mask"] = nullptr;
    stats["threads"] = v.stats.threads;
    j["stats"] = stats;
    return j.dump();
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::windmill: return "windmill";
        case Strategy::dense: return "dense";
        case Strategy::auto_select: return "auto";
        case Strategy::brute: return "brute";
    }
    return "auto";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
    if (name == "windmill") return Strategy::windmill;
    if (name == "dense") return Strategy::dense;
    if (name == "auto") return Strategy::auto_select;
    if (name == "brute") return Strategy::brute;
    return std::nullopt;
}

} // namespace indcut
