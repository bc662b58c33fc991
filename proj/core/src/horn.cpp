#include "hornmodal/horn.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hornmodal {

int HornClause::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
        if (variables[i] == name) return static_cast<int>(i);
    return -1;
}

bool HornClause::in_preq(const std::string& name) const {
    for (const auto& [a, b] : preq_edges)
        if (a == name || b == name) return true;
    return false;
}

std::vector<std::pair<int, int>> HornClause::preq_index_edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(preq_edges.size());
    for (const auto& [a, b] : preq_edges)
        out.emplace_back(var_index(a), var_index(b));
    return out;
}

std::vector<std::vector<int>> HornClause::preq_components() const {
    int n = static_cast<int>(variables.size());
    std::vector<int> comp(n, -1);
    std::vector<bool> in_graph(n, false);
    auto edges = preq_index_edges();
    for (auto [a, b] : edges) in_graph[a] = in_graph[b] = true;

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);

    std::vector<std::vector<int>> out;
    std::vector<int> slot(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!in_graph[v]) continue;
        int r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(v);
    }
    return out;
}

bool HornClause::conclusion_connected_in_preq() const {
    if (conclusion.is_false) return false;
    if (!in_preq(conclusion.x) || !in_preq(conclusion.y)) return false;
    if (conclusion.x == conclusion.y) return true;
    int cx = var_index(conclusion.x), cy = var_index(conclusion.y);
    for (const auto& comp : preq_components()) {
        bool hx = std::find(comp.begin(), comp.end(), cx) != comp.end();
        bool hy = std::find(comp.begin(), comp.end(), cy) != comp.end();
        if (hx && hy) return true;
        if (hx || hy) return false;
    }
    return false;
}

std::string to_string(const HornClause& c) {
    std::string out;
    for (std::size_t i = 0; i < c.preq_edges.size(); ++i) {
        if (i) out += ", ";
        out += c.preq_edges[i].first + " R " + c.preq_edges[i].second;
    }
    if (!c.preq_edges.empty()) out += ' ';
    out += "-> ";
    if (c.conclusion.is_false)
        out += "false";
    else
        out += c.conclusion.x + " R " + c.conclusion.y;
    return out;
}

std::string to_string(const HornFormula& f) {
    std::string out;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        if (i) out += "; ";
        out += to_string(f.clauses[i]);
    }
    return out;
}

namespace {

void add_var(HornClause& c, const std::string& v) {
    if (c.var_index(v) < 0) c.variables.push_back(v);
}

void add_edge(HornClause& c, const std::string& a, const std::string& b) {
    add_var(c, a);
    add_var(c, b);
    auto e = std::make_pair(a, b);
    if (std::find(c.preq_edges.begin(), c.preq_edges.end(), e) == c.preq_edges.end())
        c.preq_edges.push_back(e);
}

} // namespace

HornClause refl_clause() {
    HornClause c;
    add_var(c, "x");
    c.conclusion = {false, "x", "x"};
    return c;
}

HornClause symm_clause() {
    HornClause c;
    add_edge(c, "x", "y");
    c.conclusion = {false, "y", "x"};
    return c;
}

HornClause trans_clause() {
    HornClause c;
    add_edge(c, "x", "y");
    add_edge(c, "y", "z");
    c.conclusion = {false, "x", "z"};
    return c;
}

HornClause euclid_clause() { return chain_pair_clause(1, 1); }

HornClause chain_pair_clause(int k, int l) {
    if (k < 0 || l < 0)
        throw std::invalid_argument("chain_pair_clause: negative length");
    HornClause c;
    auto xname = [&](int i) { return i == 0 ? std::string("w") : "x" + std::to_string(i); };
    auto yname = [&](int i) { return i == 0 ? std::string("w") : "y" + std::to_string(i); };
    add_var(c, "w");
    for (int i = 1; i <= k; ++i) add_edge(c, xname(i - 1), xname(i));
    for (int i = 1; i <= l; ++i) add_edge(c, yname(i - 1), yname(i));
    c.conclusion = {false, xname(k), yname(l)};
    return c;
}

} // namespace hornmodal
