#ifndef CHROMATICA_GRAPH_HPP
#define CHROMATICA_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chromatica {

// A simple undirected graph on vertices 1..n. The labeling is part of the
// semantics: ascent statistics and unit-interval structure read it.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // Edges as {i, j} with i < j, in lexicographic order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        return u != v && (adj_[static_cast<size_t>(u)] >> v) & 1u;
    }
    std::uint64_t adjacency_mask(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const;
    std::vector<int> degree_sequence() const; // descending

    bool is_connected() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::uint64_t> adj_; // index 0 unused
};

// A natural unit interval order on [n], induced by a non-decreasing sequence
// m of length n-1 with i <= m_i <= n. The order is i <_P j iff m_i < j.
class IntervalSeq {
public:
    IntervalSeq(std::vector<int> m, int n);
    // n = length + 1
    static IntervalSeq from_values(const std::vector<int>& m);
    static IntervalSeq parse(const std::string& text); // "2,4,6,8,8,8,8"

    int n() const { return n_; }
    const std::vector<int>& values() const { return m_; }
    // m_i with the convention m_n = n.
    int m(int i) const { return i == n_ ? n_ : m_[static_cast<size_t>(i - 1)]; }

    bool less_p(int i, int j) const { return i < j && m(i) < j; }
    bool incomparable(int i, int j) const { return !less_p(i, j) && !less_p(j, i); }

    // Number of incomparable pairs, i.e. edges of the incomparability graph.
    int edge_pair_count() const;

    std::string to_string() const;

    bool operator==(const IntervalSeq& o) const { return n_ == o.n_ && m_ == o.m_; }

private:
    std::vector<int> m_;
    int n_;
};

// Graph families.
Graph complete(int n);
Graph path(int n);
Graph spider(const std::vector<int>& legs);
Graph line_graph(const Graph& g);
Graph generalized_spider(int n, const std::vector<int>& legs);
Graph generalized_net(int n);
Graph nuig(const IntervalSeq& seq);
Graph horseshoe_crab(int m2, int m3, int n);
IntervalSeq horseshoe_crab_seq(int m2, int m3, int n);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Structural predicates, brute force over vertex subsets; fine at desk scale.
bool is_claw_free(const Graph& g);
bool is_p4_free(const Graph& g);
bool is_p4_sparse(const Graph& g);

// Exact isomorphism by backtracking over degree-compatible bijections.
// Both graphs must have at most 12 vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

} // namespace chromatica

#endif
