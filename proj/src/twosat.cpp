#include "indcut/twosat.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace indcut {

bool satisfies(const TwoSatFormula& f, const Assignment& a) {
    auto truth = [&](Lit l) { return a[l.var] != l.negated; };
    for (const TwoSatClause& c : f.clauses) {
        bool sat = false;
        for (int i = 0; i < c.size; ++i) sat = sat || truth(c.lits[i]);
        if (!sat) return false;
    }
    return true;
}

namespace {

// Node 2v is the positive literal of variable v, node 2v+1 its negation.
int node_of(Lit l) { return 2 * l.var + (l.negated ? 1 : 0); }

struct ImplicationGraph {
    int num_nodes;
    std::vector<std::vector<int>> out;
    std::vector<char> touched;

    explicit ImplicationGraph(const TwoSatFormula& f)
        : num_nodes(2 * f.num_vars), out(num_nodes), touched(f.num_vars, 0) {
        for (const TwoSatClause& c : f.clauses) {
            Lit a = c.lits[0];
            Lit b = c.size == 2 ? c.lits[1] : c.lits[0];
            out[node_of(~a)].push_back(node_of(b));
            out[node_of(~b)].push_back(node_of(a));
            touched[a.var] = 1;
            touched[b.var] = 1;
        }
    }
};

// Iterative Tarjan. Components are numbered in completion order, so a
// smaller id means later in topological order of the condensation.
struct TarjanScc {
    const std::vector<std::vector<int>>& out;
    std::vector<int> disc, low, comp, stack;
    std::vector<char> on_stack;
    int timer = 0, num_comps = 0;

    explicit TarjanScc(const std::vector<std::vector<int>>& adj)
        : out(adj),
          disc(adj.size(), -1),
          low(adj.size(), 0),
          comp(adj.size(), -1),
          on_stack(adj.size(), 0) {
        for (size_t v = 0; v < adj.size(); ++v)
            if (disc[v] == -1) run(static_cast<int>(v));
    }

    void run(int root) {
        struct Frame {
            int v;
            size_t next;
        };
        std::vector<Frame> frames;
        frames.push_back({root, 0});
        disc[root] = low[root] = timer++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next < out[f.v].size()) {
                int w = out[f.v][f.next++];
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == disc[v]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp[w] = num_comps;
                        if (w == v) break;
                    }
                    ++num_comps;
                }
            }
        }
    }
};

} // namespace

std::optional<Assignment> solve(const TwoSatFormula& f) {
    ImplicationGraph ig(f);
    TarjanScc scc(ig.out);
    Assignment a(f.num_vars, 0);
    for (int v = 0; v < f.num_vars; ++v) {
        if (scc.comp[2 * v] == scc.comp[2 * v + 1]) return std::nullopt;
        // A literal is true when its component is later in topological
        // order than the component of its negation.
        a[v] = ig.touched[v] && scc.comp[2 * v] < scc.comp[2 * v + 1];
    }
    return a;
}

std::optional<Assignment> brute_solve(const TwoSatFormula& f) {
    if (f.num_vars > 25)
        throw std::invalid_argument("brute_solve limited to 25 variables");
    const uint32_t limit = uint32_t{1} << f.num_vars;
    for (uint32_t pattern = 0; pattern < limit; ++pattern) {
        Assignment a(f.num_vars, 0);
        for (int v = 0; v < f.num_vars; ++v) a[v] = (pattern >> v) & 1;
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

} // namespace indcut
