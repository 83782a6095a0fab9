#ifndef INDCUT_GRAPH_HPP
#define INDCUT_GRAPH_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace indcut {

// Invariant violations that indicate a bug, not bad input. The CLI maps
// these to a distinct exit code.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {
inline void require(bool cond, const char* msg) {
    if (!cond) throw internal_error(msg);
}
} // namespace detail

// Dense bitset over a fixed vertex universe 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    void add(int v) { words_[word(v)] |= bit(v); }
    void remove(int v) { words_[word(v)] &= ~bit(v); }
    bool contains(int v) const {
        return v >= 0 && v < n_ && (words_[word(v)] & bit(v)) != 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    // Set difference: remove o's members.
    VertexSet& operator-=(const VertexSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet s(n_);
        for (size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& o) const {
        size_t k = std::min(words_.size(), o.words_.size());
        for (size_t i = 0; i < k; ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Iterates members in ascending order.
    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : s_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = s_->next_after(v_);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }

    private:
        const VertexSet* s_;
        int v_;
    };
    const_iterator begin() const { return {this, first() < 0 ? n_ : first()}; }
    const_iterator end() const { return {this, n_}; }

private:
    static size_t word(int v) { return static_cast<size_t>(v) >> 6; }
    static uint64_t bit(int v) { return uint64_t{1} << (v & 63); }

    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
    }

    int next_after(int v) const {
        ++v;
        if (v >= n_) return n_;
        size_t i = word(v);
        uint64_t w = words_[i] >> (v & 63);
        if (w) return v + __builtin_ctzll(w);
        for (++i; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + __builtin_ctzll(words_[i]));
        return n_;
    }

    int n_ = 0;
    std::vector<uint64_t> words_;
};

// Three pairwise adjacent vertices, stored ascending.
struct Triangle {
    std::array<int, 3> v;

    Triangle() : v{-1, -1, -1} {}
    Triangle(int a, int b, int c) : v{a, b, c} {
        if (v[0] > v[1]) std::swap(v[0], v[1]);
        if (v[1] > v[2]) std::swap(v[1], v[2]);
        if (v[0] > v[1]) std::swap(v[0], v[1]);
    }

    bool contains(int u) const { return v[0] == u || v[1] == u || v[2] == u; }
    bool operator==(const Triangle& o) const { return v == o.v; }
    bool operator<(const Triangle& o) const { return v < o.v; }
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Self-loops are rejected; duplicate edges collapse silently.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    const VertexSet& neighbor_set(int v) const { return adj_bits_[v]; }
    bool adjacent(int u, int v) const { return adj_bits_[u].contains(v); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;

    // Edges as (u, v) with u < v, ascending.
    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<VertexSet> adj_bits_;
};

// Connected components of g - removed, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> components(const Graph& g);

// Articulation points of g.
VertexSet cut_vertices(const Graph& g);

// All triangles, each once, lexicographically sorted.
// triangles() may use OpenMP on large graphs; triangles_serial() is the
// reference implementation. Both produce identical output.
std::vector<Triangle> triangles(const Graph& g);
std::vector<Triangle> triangles_serial(const Graph& g);

// Vertices that lie in no triangle of g.
VertexSet vertices_without_triangle(const Graph& g);

// True iff no edge of g has both ends in s.
bool is_independent(const Graph& g, const VertexSet& s);

} // namespace indcut

#endif
