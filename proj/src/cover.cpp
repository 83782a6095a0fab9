#include "indcut/cover.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace indcut {

VertexSet Windmill::vertex_set(int universe) const {
    VertexSet s(universe);
    s.add(center);
    for (auto [x, y] : pairs) {
        s.add(x);
        s.add(y);
    }
    return s;
}

VertexSet QuasiCover::covered_vertices(int universe) const {
    VertexSet s(universe);
    for (const VertexSet& grp : groups) s |= grp;
    return s;
}

double alpha_delta(int max_degree) {
    return 1.0 / (2 + 4 * (max_degree / 2));
}

double windmill_cover_bound(int n, int max_degree) {
    return (0.5 - alpha_delta(max_degree)) * n;
}

namespace {

// Vertex-disjoint windmill collection under construction. owner[v] is the
// index of the windmill containing v, or -1.
struct WindmillCollection {
    const Graph& g;
    std::vector<Windmill> mills;
    std::vector<int> owner;
    int covered_count = 0;

    // termination meters
    int replacements = 0;
    int steps_since_replacement = 0;
    int max_steps_between = 0;

    explicit WindmillCollection(const Graph& gr) : g(gr), owner(gr.order(), -1) {}

    bool covered(int v) const { return owner[v] >= 0; }

    void claim(int v, int mill) {
        detail::require(owner[v] == -1, "windmill collection: vertex claimed twice");
        owner[v] = mill;
        ++covered_count;
    }

    void growth_step() {
        ++steps_since_replacement;
        max_steps_between = std::max(max_steps_between, steps_since_replacement);
        detail::require(steps_since_replacement <= g.order(),
                        "windmill procedure exceeded its growth-step meter");
    }

    void add_one_windmill(const Triangle& t) {
        int idx = static_cast<int>(mills.size());
        mills.push_back({t.v[0], {{t.v[1], t.v[2]}}});
        for (int v : t.v) claim(v, idx);
        growth_step();
    }

    void attach_pair(int mill, int x, int y) {
        mills[mill].pairs.emplace_back(std::min(x, y), std::max(x, y));
        claim(x, mill);
        claim(y, mill);
        growth_step();
    }

    void remove_mill(int idx) {
        for (int v : mills[idx].vertex_set(g.order()).members()) {
            owner[v] = -1;
            --covered_count;
        }
        int last = static_cast<int>(mills.size()) - 1;
        if (idx != last) {
            mills[idx] = std::move(mills[last]);
            for (int v : mills[idx].vertex_set(g.order()).members()) owner[v] = idx;
        }
        mills.pop_back();
    }

    void validate() const {
        int seen = 0;
        for (size_t i = 0; i < mills.size(); ++i) {
            const Windmill& w = mills[i];
            detail::require(w.num_pairs() >= 1, "windmill without leaf pairs");
            detail::require(owner[w.center] == static_cast<int>(i), "owner map out of sync");
            ++seen;
            for (auto [x, y] : w.pairs) {
                detail::require(x != y && x != w.center && y != w.center,
                                "windmill vertices not distinct");
                detail::require(g.adjacent(w.center, x) && g.adjacent(w.center, y),
                                "windmill center not adjacent to a leaf");
                detail::require(g.adjacent(x, y), "windmill leaf pair not adjacent");
                detail::require(owner[x] == static_cast<int>(i) &&
                                    owner[y] == static_cast<int>(i),
                                "owner map out of sync");
                seen += 2;
            }
        }
        detail::require(seen == covered_count, "covered-vertex count out of sync");
    }
};

// Greedy growth to maximality under the two extension moves. Coverage only
// grows, so a single lexicographic pass per move reaches the fixpoint.
void greedy_extend(WindmillCollection& col, const std::vector<Triangle>& tris) {
    for (const Triangle& t : tris) {
        if (!col.covered(t.v[0]) && !col.covered(t.v[1]) && !col.covered(t.v[2]))
            col.add_one_windmill(t);
    }
    for (int x = 0; x < col.g.order(); ++x) {
        if (col.covered(x)) continue;
        for (int y : col.g.neighbors(x)) {
            if (y <= x || col.covered(y)) continue;
            // lowest-id center adjacent to both leaves
            int best = -1;
            const VertexSet common = col.g.neighbor_set(x) & col.g.neighbor_set(y);
            for (int c : common) {
                if (col.covered(c) && col.mills[col.owner[c]].center == c) {
                    best = c;
                    break;
                }
            }
            if (best >= 0) {
                col.attach_pair(col.owner[best], x, y);
                break; // x consumed, move to the next x
            }
        }
    }
}

} // namespace

std::vector<Windmill> build_windmill_collection(const Graph& g, WindmillBuildStats* stats) {
    const std::vector<Triangle> tris = triangles(g);
    WindmillCollection col(g);
    greedy_extend(col, tris);
    col.validate();

    while (true) {
        const Triangle* pending = nullptr;
        for (const Triangle& t : tris) {
            int hits = col.covered(t.v[0]) + col.covered(t.v[1]) + col.covered(t.v[2]);
            if (hits <= 1) {
                pending = &t;
                break;
            }
        }
        if (!pending) break;
        const Triangle& t = *pending;

        int v = -1;
        for (int u : t.v)
            if (col.covered(u)) v = u;
        if (v == -1) {
            col.add_one_windmill(t); // untouched triangle, new 1-windmill
        } else {
            int wi = col.owner[v];
            Windmill& w = col.mills[wi];
            int tx = -1, ty = -1;
            for (int u : t.v)
                if (u != v) (tx == -1 ? tx : ty) = u;

            if (w.center != v && w.num_pairs() >= 2) {
                // Splitting rule: the rest of the windmill still holds a
                // triangle, so trade the windmill for two disjoint ones.
                int pi = 0;
                while (w.pairs[pi].first == v || w.pairs[pi].second == v) ++pi;
                Triangle spare(w.center, w.pairs[pi].first, w.pairs[pi].second);
                col.remove_mill(wi);
                ++col.replacements;
                col.steps_since_replacement = 0;
                detail::require(3 * col.replacements <= g.order(),
                                "windmill procedure exceeded its replacement meter");
                col.add_one_windmill(Triangle(v, tx, ty));
                col.add_one_windmill(spare);
            } else if (w.center == v) {
                // Absorb the two free vertices as a fresh leaf pair.
                col.attach_pair(wi, tx, ty);
            } else {
                // v is a leaf of a 1-windmill {c, u, v}: rebuild as a
                // 2-windmill centered at v with pairs {c, u} and {tx, ty}.
                int c = w.center;
                int u = w.pairs[0].first == v ? w.pairs[0].second : w.pairs[0].first;
                col.remove_mill(wi);
                int idx = static_cast<int>(col.mills.size());
                col.mills.push_back({v, {}});
                col.claim(v, idx);
                col.attach_pair(idx, std::min(c, u), std::max(c, u));
                col.attach_pair(idx, tx, ty);
            }
        }
        greedy_extend(col, tris);
        col.validate();
    }

    if (stats) {
        stats->replacements = col.replacements;
        stats->max_steps_between = col.max_steps_between;
    }
    return col.mills;
}

QuasiCover windmill_cover(const Graph& g) {
    QuasiCover cover;
    cover.method = CoverMethod::windmill;
    std::vector<Triangle> tris;
    for (const Windmill& w : build_windmill_collection(g))
        for (auto [x, y] : w.pairs) tris.emplace_back(w.center, x, y);
    std::sort(tris.begin(), tris.end());
    for (const Triangle& t : tris) {
        cover.groups.push_back(VertexSet::of(g.order(), {t.v[0], t.v[1], t.v[2]}));
        cover.witnesses.push_back(t);
    }
    return cover;
}

QuasiCover dense_cover(const Graph& g) {
    const std::vector<Triangle> tris = triangles(g);
    const int nt = static_cast<int>(tris.size());

    std::vector<int> parent(nt);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a), b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    // Triangles sharing an edge merge into one group.
    std::map<std::pair<int, int>, int> edge_owner;
    for (int i = 0; i < nt; ++i) {
        const auto& v = tris[i].v;
        for (auto [a, b] : {std::pair{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}}) {
            auto [it, fresh] = edge_owner.try_emplace({a, b}, i);
            if (!fresh) unite(it->second, i);
        }
    }

    QuasiCover cover;
    cover.method = CoverMethod::dense;
    std::vector<int> group_of_root(nt, -1);
    for (int i = 0; i < nt; ++i) {
        int r = find(i);
        if (group_of_root[r] == -1) {
            group_of_root[r] = cover.size();
            cover.groups.emplace_back(g.order());
            cover.witnesses.push_back(tris[i]); // lexicographically least in class
        }
        for (int v : tris[i].v) cover.groups[group_of_root[r]].add(v);
    }
    return cover;
}

QuasiCover auto_cover(const Graph& g) {
    QuasiCover wm = windmill_cover(g);
    QuasiCover dn = dense_cover(g);
    return dn.size() < wm.size() ? dn : wm;
}

bool check_quasi_cover(const Graph& g, const QuasiCover& c) {
    const VertexSet covered = c.covered_vertices(g.order());
    for (const Triangle& t : triangles(g)) {
        int hits = covered.contains(t.v[0]) + covered.contains(t.v[1]) +
                   covered.contains(t.v[2]);
        if (hits < 2) return false;
    }
    return true;
}

} // namespace indcut
