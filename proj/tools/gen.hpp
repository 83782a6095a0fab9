#ifndef INDCUT_TOOLS_GEN_HPP
#define INDCUT_TOOLS_GEN_HPP

#include <cstdint>
#include <vector>

#include "indcut/graph.hpp"

// Seeded instance generators. Kept out of the core library: the library
// surface is the decision machinery, these exist for the CLI, tests and
// benchmarks. All output is a pure function of the arguments.
namespace indcut::gen {

class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    uint64_t next();
    // Uniform in [0, k); k > 0.
    int below(int k);
    // Uniform in [0, 1).
    double uniform01();
    bool chance(double p) { return uniform01() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[below(i + 1)]);
    }

private:
    uint64_t state_;
};

// Bernoulli(p) edges in shuffled pair order, skipping pairs that would
// push either endpoint above max_deg.
Graph max_degree_graph(int n, int max_deg, double p, uint64_t seed);

// Complement of a bounded-degree random graph; every vertex keeps degree
// at least ceil(beta * n). Throws std::invalid_argument when infeasible.
Graph dense_graph(int n, double beta, uint64_t seed);

// Disjoint union of p_i-windmills; with connect, consecutive centers are
// joined by an edge.
Graph windmill_union(const std::vector<int>& ps, bool connect);

// Two k-cycles joined by a perfect matching (k = 3 gives the triangular
// prism).
Graph circular_ladder(int k);

Graph erdos_renyi(int n, double p, uint64_t seed);

// Hamiltonian path plus Bernoulli(p) extra edges (degree-capped when
// max_deg > 0): always connected, handy for randomized suites.
Graph connected_graph(int n, int max_deg, double p, uint64_t seed);

// k triangles arranged in a cycle, consecutive ones joined by an edge:
// 2-connected, max degree 3, every vertex in a triangle. 3k vertices.
Graph triangle_necklace(int k);

// Random cubic graph on 2q vertices (Hamiltonian cycle plus a perfect
// matching avoiding cycle edges).
Graph random_cubic(int q, uint64_t seed);

// Line graph: one vertex per edge of g, adjacent when the edges share an
// endpoint. For cubic g this is 4-regular with every vertex in a triangle.
Graph line_graph(const Graph& g);

} // namespace indcut::gen

#endif
