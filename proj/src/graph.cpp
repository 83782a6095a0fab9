#include "indcut/graph.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indcut {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), adj_(n), adj_bits_(n, VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (adj_bits_[u].contains(v)) continue;
        adj_bits_[u].add(v);
        adj_bits_[v].add(u);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        ++m_;
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    const int n = g.order();
    std::vector<VertexSet> out;
    std::vector<char> seen(n, 0);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || removed.contains(s)) continue;
        VertexSet comp(n);
        queue.clear();
        queue.push_back(s);
        seen[s] = 1;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            comp.add(u);
            for (int w : g.neighbors(u)) {
                if (seen[w] || removed.contains(w)) continue;
                seen[w] = 1;
                queue.push_back(w);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    return components(g, VertexSet(g.order()));
}

namespace {

// Iterative lowpoint DFS; recursion would overflow on long paths.
struct ArticulationFinder {
    const Graph& g;
    std::vector<int> disc, low, parent, child_count;
    VertexSet points;
    int timer = 0;

    explicit ArticulationFinder(const Graph& gr)
        : g(gr),
          disc(gr.order(), -1),
          low(gr.order(), 0),
          parent(gr.order(), -1),
          child_count(gr.order(), 0),
          points(gr.order()) {}

    void run(int root) {
        struct Frame {
            int v;
            size_t next_edge;
        };
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            auto nbs = g.neighbors(f.v);
            if (f.next_edge < nbs.size()) {
                int w = nbs[f.next_edge++];
                if (disc[w] == -1) {
                    parent[w] = f.v;
                    ++child_count[f.v];
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, 0});
                } else if (w != parent[f.v]) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[f.v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[f.v]);
                    if (p != root && low[f.v] >= disc[p]) points.add(p);
                }
            }
        }
        if (child_count[root] >= 2) points.add(root);
    }
};

} // namespace

VertexSet cut_vertices(const Graph& g) {
    ArticulationFinder f(g);
    for (int v = 0; v < g.order(); ++v)
        if (f.disc[v] == -1) f.run(v);
    return f.points;
}

namespace {

// Triangles u < v < w with uv an edge and w in N(u) ∩ N(v).
void triangles_of_vertex(const Graph& g, int u, std::vector<Triangle>& out) {
    for (int v : g.neighbors(u)) {
        if (v <= u) continue;
        VertexSet common = g.neighbor_set(u) & g.neighbor_set(v);
        for (int w : common) {
            if (w > v) out.emplace_back(u, v, w);
        }
    }
}

} // namespace

std::vector<Triangle> triangles_serial(const Graph& g) {
    std::vector<Triangle> out;
    for (int u = 0; u < g.order(); ++u) triangles_of_vertex(g, u, out);
    return out;
}

std::vector<Triangle> triangles(const Graph& g) {
#ifdef _OPENMP
    // Work estimate: bitset intersections cost O(n/64) words per edge.
    const long long work = static_cast<long long>(g.size()) * (g.order() / 64 + 1);
    if (work > 1 << 16 && omp_get_max_threads() > 1) {
        std::vector<std::vector<Triangle>> per_thread(omp_get_max_threads());
#pragma omp parallel for schedule(dynamic, 64)
        for (int u = 0; u < g.order(); ++u)
            triangles_of_vertex(g, u, per_thread[omp_get_thread_num()]);
        std::vector<Triangle> out;
        for (auto& part : per_thread)
            out.insert(out.end(), part.begin(), part.end());
        std::sort(out.begin(), out.end());
        return out;
    }
#endif
    return triangles_serial(g);
}

VertexSet vertices_without_triangle(const Graph& g) {
    VertexSet in_triangle(g.order());
    for (const Triangle& t : triangles(g))
        for (int v : t.v) in_triangle.add(v);
    return in_triangle.complement();
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.neighbor_set(v).intersects(s)) return false;
    return true;
}

} // namespace indcut
