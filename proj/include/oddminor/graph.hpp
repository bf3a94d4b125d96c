#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace oddminor {

// Subset of 0..n-1 backed by 64-bit words.  All binary operations require
// operands over the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.set(v);
        return s;
    }

    int universe() const { return n_; }
    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool contains(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (o.w_[i] & ~w_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }

    // Smallest member, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }
    // Smallest member > v, or -1.
    int next(int v) const {
        for (int i = (v + 1) >> 6; i < int(w_.size()); ++i) {
            uint64_t w = w_[i];
            if (i == (v + 1) >> 6) w &= ~uint64_t(0) << ((v + 1) & 63);
            if (w) return int(i * 64 + __builtin_ctzll(w));
        }
        return -1;
    }
    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }
    template <class F>
    void for_each(F f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// Simple undirected graph over vertices 0..n-1, adjacency as bitsets.
// Treated as an immutable value once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

    int n() const { return n_; }
    void add_edge(int u, int v) {
        assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
        adj_[u].set(v);
        adj_[v].set(u);
    }
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }
    int edge_count() const {
        int s = 0;
        for (int v = 0; v < n_; ++v) s += degree(v);
        return s / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
        return out;
    }
    bool is_complete() const { return edge_count() == n_ * (n_ - 1) / 2; }
    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices outside s
    std::vector<int> new_to_old;
};

Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);
Graph parse_edge_list(const std::string& text);   // plain "n / u v" or DIMACS
Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);
// Components of g[inside], reported in original vertex indices.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& inside);

}  // namespace oddminor
