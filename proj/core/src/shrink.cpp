#include "hornmodal/shrink.hpp"

#include <algorithm>
#include <stdexcept>

namespace hornmodal {

namespace {

// Shortest distance from w inside the induced subgraph on `kept`; -1 where
// unreachable (cannot happen for members of a witness chain, but kept worlds
// may gain shortcuts through induced edges, which is why this is recomputed).
std::vector<int> induced_levels(const Graph& g, const std::vector<char>& kept, int w) {
    std::vector<int> level(g.size(), -1);
    level[w] = 0;
    std::vector<int> frontier{w};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier)
            for (int v = 0; v < g.size(); ++v)
                if (kept[v] && g.edge(u, v) && level[v] < 0) {
                    level[v] = level[u] + 1;
                    next.push_back(v);
                }
        frontier = std::move(next);
    }
    return level;
}

} // namespace

ShrinkResult shrink(const KripkeModel& m, int w, const FormulaPtr& phi) {
    if (!eval_modal(m, w, phi))
        throw std::invalid_argument("shrink: formula does not hold at the given world");

    auto subs = subformulas(phi);
    int md = modal_depth(phi);
    int n = m.graph.size();

    struct DiamondInfo {
        int md;                  // modal depth of the diamond itself
        std::vector<char> holds; // diamond truth per world
        std::vector<char> child; // child truth per world
    };
    std::vector<DiamondInfo> diamonds;
    for (const auto& s : subs) {
        if (s->op() != Op::Diamond) continue;
        DiamondInfo d;
        d.md = s->modal_depth();
        d.holds = eval_all_worlds(m, s);
        d.child = eval_all_worlds(m, s->lhs());
        diamonds.push_back(std::move(d));
    }

    // A kept world at level i owes a witness for each diamond that fits the
    // remaining depth budget. Induced edges between kept worlds can lower
    // levels and thereby raise budgets, so iterate to a fixpoint.
    std::vector<char> kept(n, 0);
    kept[w] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        auto level = induced_levels(m.graph, kept, w);
        for (int u = 0; u < n; ++u) {
            if (!kept[u] || level[u] < 0 || level[u] >= md) continue;
            for (const auto& d : diamonds) {
                if (!d.holds[u]) continue;
                if (level[u] + d.md > md) continue;
                bool have = false;
                for (int v = 0; v < n && !have; ++v)
                    if (kept[v] && m.graph.edge(u, v) && d.child[v]) have = true;
                if (have) continue;
                int pick = -1;
                for (int v = 0; v < n && pick < 0; ++v)
                    if (m.graph.edge(u, v) && d.child[v]) pick = v;
                kept[pick] = 1;
                changed = true;
            }
        }
    }

    ShrinkResult out;
    out.worlds.push_back(w);
    for (int v = 0; v < n; ++v)
        if (kept[v] && v != w) out.worlds.push_back(v);
    out.model = m.restrict_to(out.worlds);
    out.model.root = 0;
    return out;
}

} // namespace hornmodal
