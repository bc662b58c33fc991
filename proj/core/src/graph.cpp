#include "hornmodal/graph.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace hornmodal {

Graph::Graph(int n) : n_(n), words_per_row_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("Graph: negative size");
    bits_.assign(static_cast<std::size_t>(n_) * words_per_row_, 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::edge(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::out_of_range("Graph::add_edge: vertex out of range");
    row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void Graph::remove_edge(int u, int v) {
    row(u)[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t Graph::edge_count() const {
    std::size_t c = 0;
    for (auto w : bits_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count());
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (edge(u, v)) out.emplace_back(u, v);
    return out;
}

int Graph::out_degree(int u) const {
    int c = 0;
    for (int w = 0; w < words_per_row_; ++w) c += std::popcount(row(u)[w]);
    return c;
}

std::vector<int> Graph::successors(int u) const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (edge(u, v)) out.push_back(v);
    return out;
}

std::vector<int> Graph::predecessors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (edge(u, v)) out.push_back(u);
    return out;
}

Graph Graph::transpose() const {
    Graph t(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (edge(u, v)) t.add_edge(v, u);
    return t;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

namespace {

// out = a ∘ b over the boolean semiring: out(u,w) iff ∃v a(u,v) ∧ b(v,w).
Graph compose(const Graph& a, const Graph& b) {
    int n = a.size();
    Graph out(n);
    int words = out.words();
    for (int u = 0; u < n; ++u) {
        std::uint64_t* orow = out.row(u);
        for (int v = 0; v < n; ++v) {
            if (!a.edge(u, v)) continue;
            const std::uint64_t* brow = b.row(v);
            for (int w = 0; w < words; ++w) orow[w] |= brow[w];
        }
    }
    return out;
}

Graph identity(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, v);
    return g;
}

} // namespace

Graph walk_relation(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("walk_relation: negative length");
    Graph acc = identity(g.size());
    for (int i = 0; i < k; ++i) acc = compose(acc, g);
    return acc;
}

bool k_transitive(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_transitive: k must be >= 1");
    Graph walks = walk_relation(g, k);
    for (int u = 0; u < g.size(); ++u)
        for (int v = 0; v < g.size(); ++v)
            if (walks.edge(u, v) && !g.edge(u, v)) return false;
    return true;
}

std::vector<bool> reachable_forward(const Graph& g, int w) {
    std::vector<bool> seen(g.size(), false);
    std::vector<int> stack;
    for (int v = 0; v < g.size(); ++v)
        if (g.edge(w, v) && !seen[v]) {
            seen[v] = true;
            stack.push_back(v);
        }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < g.size(); ++v)
            if (g.edge(u, v) && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return seen;
}

std::vector<bool> reachable_within(const Graph& g, int w, int depth) {
    std::vector<bool> seen(g.size(), false);
    seen[w] = true;
    std::vector<int> frontier{w};
    for (int d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<int> next;
        for (int u : frontier)
            for (int v = 0; v < g.size(); ++v)
                if (g.edge(u, v) && !seen[v]) {
                    seen[v] = true;
                    next.push_back(v);
                }
        frontier = std::move(next);
    }
    return seen;
}

} // namespace hornmodal
