#include "gen.hpp"

#include <cmath>
#include <stdexcept>

namespace indcut::gen {

uint64_t Rng::next() {
    // splitmix64: tiny, seeded, identical everywhere
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int Rng::below(int k) {
    const uint64_t bound = ~uint64_t{0} - ~uint64_t{0} % static_cast<uint64_t>(k);
    uint64_t r;
    do {
        r = next();
    } while (r >= bound);
    return static_cast<int>(r % static_cast<uint64_t>(k));
}

double Rng::uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

} // namespace

Graph max_degree_graph(int n, int max_deg, double p, uint64_t seed) {
    if (n < 0 || max_deg < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("max_degree_graph: bad parameters");
    Rng rng(seed);
    auto pairs = all_pairs(n);
    rng.shuffle(pairs);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pairs) {
        if (deg[u] >= max_deg || deg[v] >= max_deg) continue;
        if (!rng.chance(p)) continue;
        ++deg[u];
        ++deg[v];
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph dense_graph(int n, double beta, uint64_t seed) {
    if (n <= 0 || beta <= 0.0 || beta >= 1.0)
        throw std::invalid_argument("dense_graph: need 0 < beta < 1 and n > 0");
    const int min_deg = static_cast<int>(std::ceil(beta * n));
    if (min_deg > n - 1)
        throw std::invalid_argument("dense_graph: ceil(beta*n) exceeds n-1");
    const int removable = n - 1 - min_deg; // per-vertex removal budget
    Rng rng(seed);
    auto pairs = all_pairs(n);
    rng.shuffle(pairs);
    std::vector<int> removed(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : pairs) {
        if (removed[u] < removable && removed[v] < removable && rng.chance(0.85)) {
            ++removed[u];
            ++removed[v];
            continue;
        }
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph windmill_union(const std::vector<int>& ps, bool connect) {
    int n = 0;
    for (int p : ps) {
        if (p < 1) throw std::invalid_argument("windmill_union: every p must be >= 1");
        n += 1 + 2 * p;
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> centers;
    int base = 0;
    for (int p : ps) {
        const int center = base;
        centers.push_back(center);
        for (int i = 0; i < p; ++i) {
            const int x = base + 1 + 2 * i, y = x + 1;
            edges.emplace_back(center, x);
            edges.emplace_back(center, y);
            edges.emplace_back(x, y);
        }
        base += 1 + 2 * p;
    }
    if (connect)
        for (size_t i = 1; i < centers.size(); ++i)
            edges.emplace_back(centers[i - 1], centers[i]);
    return Graph(n, edges);
}

Graph circular_ladder(int k) {
    if (k < 3) throw std::invalid_argument("circular_ladder: need k >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(i, (i + 1) % k);
        edges.emplace_back(k + i, k + (i + 1) % k);
        edges.emplace_back(i, k + i);
    }
    return Graph(2 * k, edges);
}

Graph erdos_renyi(int n, double p, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph triangle_necklace(int k) {
    if (k < 2) throw std::invalid_argument("triangle_necklace: need k >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) {
        const int a = 3 * i, b = 3 * i + 1, c = 3 * i + 2;
        edges.emplace_back(a, b);
        edges.emplace_back(a, c);
        edges.emplace_back(b, c);
        edges.emplace_back(c, (3 * (i + 1)) % (3 * k)); // joint to the next triangle
    }
    return Graph(3 * k, edges);
}

Graph random_cubic(int q, uint64_t seed) {
    const int n = 2 * q;
    if (n < 4) throw std::invalid_argument("random_cubic: need at least 4 vertices");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        rng.shuffle(order);
        std::vector<std::pair<int, int>> edges;
        std::vector<std::pair<int, int>> cycle;
        for (int i = 0; i < n; ++i) {
            int u = order[i], v = order[(i + 1) % n];
            cycle.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::vector<int> match(n);
        for (int i = 0; i < n; ++i) match[i] = i;
        rng.shuffle(match);
        bool ok = true;
        std::vector<std::pair<int, int>> matching;
        for (int i = 0; i < n; i += 2) {
            int u = std::min(match[i], match[i + 1]), v = std::max(match[i], match[i + 1]);
            matching.emplace_back(u, v);
            for (auto e : cycle) ok = ok && e != std::pair{u, v};
        }
        if (!ok) continue;
        edges = cycle;
        edges.insert(edges.end(), matching.begin(), matching.end());
        return Graph(n, edges);
    }
    throw std::runtime_error("random_cubic: no simple pairing found");
}

Graph line_graph(const Graph& g) {
    const auto edges = g.edges();
    std::vector<std::vector<int>> at_vertex(g.order());
    for (size_t i = 0; i < edges.size(); ++i) {
        at_vertex[edges[i].first].push_back(static_cast<int>(i));
        at_vertex[edges[i].second].push_back(static_cast<int>(i));
    }
    std::vector<std::pair<int, int>> line_edges;
    for (const auto& incident : at_vertex)
        for (size_t a = 0; a < incident.size(); ++a)
            for (size_t b = a + 1; b < incident.size(); ++b)
                line_edges.emplace_back(incident[a], incident[b]);
    return Graph(static_cast<int>(edges.size()), line_edges);
}

Graph connected_graph(int n, int max_deg, double p, uint64_t seed) {
    if (n >= 3 && max_deg > 0 && max_deg < 2)
        throw std::invalid_argument("connected_graph: max_deg must be >= 2");
    Rng rng(seed);
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);

    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(order[i - 1], order[i]);
        ++deg[order[i - 1]];
        ++deg[order[i]];
    }
    auto pairs = all_pairs(n);
    rng.shuffle(pairs);
    for (auto [u, v] : pairs) {
        if (max_deg > 0 && (deg[u] >= max_deg || deg[v] >= max_deg)) continue;
        if (!rng.chance(p)) continue;
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    }
    return Graph(n, edges);
}

} // namespace indcut::gen
