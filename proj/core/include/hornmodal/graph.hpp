#ifndef HORNMODAL_GRAPH_HPP
#define HORNMODAL_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace hornmodal {

// Finite directed graph on vertices 0..n-1. Self-loops allowed, no
// multi-edges. Adjacency is stored as bitset rows; sizes stay at desk scale
// (a few hundred vertices), so dense rows win everywhere.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int size() const noexcept { return n_; }
    bool edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // sorted

    int out_degree(int u) const;
    std::vector<int> successors(int u) const;
    std::vector<int> predecessors(int v) const;

    Graph transpose() const;

    // Induced subgraph on `keep` (in the given order); vertex i of the result
    // corresponds to keep[i].
    Graph induced(const std::vector<int>& keep) const;

    // Row-level access for algorithms; row u spans words [u*words(), (u+1)*words()).
    int words() const noexcept { return words_per_row_; }
    const std::uint64_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_per_row_; }
    std::uint64_t* row(int u) { return bits_.data() + static_cast<std::size_t>(u) * words_per_row_; }

    bool operator==(const Graph& other) const = default;

private:
    int n_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Boolean matrix of "a walk of exactly k steps exists" pairs, as a Graph.
// k = 0 yields the identity relation.
Graph walk_relation(const Graph& g, int k);

// Every k-step walk's endpoints are joined by an edge. k >= 1; k = 1 is
// vacuously true.
bool k_transitive(const Graph& g, int k);

// Vertices reachable from w by walks of length >= 1 (w itself only if it lies
// on a cycle or loop).
std::vector<bool> reachable_forward(const Graph& g, int w);

// Vertices reachable from w in <= depth steps, including w.
std::vector<bool> reachable_within(const Graph& g, int w, int depth);

} // namespace hornmodal

#endif // HORNMODAL_GRAPH_HPP
