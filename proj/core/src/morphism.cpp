#include "hornmodal/morphism.hpp"

#include <stdexcept>
#include <string>

#include "hornmodal/errors.hpp"

namespace hornmodal {

bool morphism_preserves_valuation(const BoundedMorphism& f) {
    // Collect variable names from both models; absent entries mean false.
    for (const auto* m : {&f.source, &f.target}) {
        for (const auto& [name, worlds] : m->valuation) {
            (void)worlds;
            for (int w = 0; w < f.source.graph.size(); ++w)
                if (f.source.var_true_at(name, w) != f.target.var_true_at(name, f.map[w]))
                    return false;
        }
    }
    return true;
}

bool morphism_is_homomorphism(const BoundedMorphism& f) {
    int n = f.source.graph.size();
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (f.source.graph.edge(u, v) && !f.target.graph.edge(f.map[u], f.map[v]))
                return false;
    return true;
}

bool back_condition_at(const BoundedMorphism& f, int w) {
    int nt = f.target.graph.size();
    int ns = f.source.graph.size();
    for (int v2 = 0; v2 < nt; ++v2) {
        if (!f.target.graph.edge(f.map[w], v2)) continue;
        bool covered = false;
        for (int v = 0; v < ns && !covered; ++v)
            if (f.source.graph.edge(w, v) && f.map[v] == v2) covered = true;
        if (!covered) return false;
    }
    return true;
}

bool is_bounded_morphism(const BoundedMorphism& f,
                         const std::vector<int>* node_depths,
                         int back_depth_limit) {
    if (static_cast<int>(f.map.size()) != f.source.graph.size()) return false;
    for (int w : f.map)
        if (w < 0 || w >= f.target.graph.size()) return false;
    if (!morphism_preserves_valuation(f)) return false;
    if (!morphism_is_homomorphism(f)) return false;
    for (int w = 0; w < f.source.graph.size(); ++w) {
        if (node_depths && back_depth_limit >= 0 &&
            (*node_depths)[w] >= back_depth_limit)
            continue;
        if (!back_condition_at(f, w)) return false;
    }
    return true;
}

UnravelResult unravel(const KripkeModel& m, int w, int depth) {
    if (depth < 0) throw std::invalid_argument("unravel: negative depth");
    if (w < 0 || w >= m.graph.size()) throw std::out_of_range("unravel: world out of range");

    UnravelResult out;
    std::vector<int> endpoint;   // model world at each tree node
    std::vector<int> parent;     // tree parent, -1 for root
    std::vector<int> node_depth;

    endpoint.push_back(w);
    parent.push_back(-1);
    node_depth.push_back(0);

    std::size_t head = 0;
    while (head < endpoint.size()) {
        int node = static_cast<int>(head);
        int d = node_depth[head];
        int world = endpoint[head];
        ++head;
        if (d == depth) continue;
        for (int v = 0; v < m.graph.size(); ++v) {
            if (!m.graph.edge(world, v)) continue;
            endpoint.push_back(v);
            parent.push_back(node);
            node_depth.push_back(d + 1);
        }
    }

    int n = static_cast<int>(endpoint.size());
    KripkeModel tree;
    tree.graph = Graph(n);
    for (int i = 1; i < n; ++i) tree.graph.add_edge(parent[i], i);
    for (const auto& [name, worlds] : m.valuation) {
        (void)worlds;
        for (int i = 0; i < n; ++i)
            if (m.var_true_at(name, endpoint[i])) tree.set_true(name, i);
    }
    tree.root = 0;

    out.morphism.source = std::move(tree);
    out.morphism.target = m;
    out.morphism.map = std::move(endpoint);
    out.depth = std::move(node_depth);
    return out;
}

BoundedMorphism saturate(const BoundedMorphism& f, const HornFormula& psi) {
    if (!horn_holds(f.target.graph, psi))
        throw std::invalid_argument("saturate: target does not satisfy the frame conditions");

    BoundedMorphism out = f;
    Graph& t = out.source.graph;

    // Clauses whose violations cannot be repaired by inserting an edge: FALSE
    // conclusions, and edge conclusions on distinct variables that do not both
    // occur in the prerequisite graph. If such a clause embeds, report.
    std::vector<int> unrepairable;
    for (std::size_t i = 0; i < psi.clauses.size(); ++i) {
        const auto& c = psi.clauses[i];
        bool repairable =
            !c.conclusion.is_false &&
            (c.conclusion.x == c.conclusion.y ||
             (c.in_preq(c.conclusion.x) && c.in_preq(c.conclusion.y)));
        if (!repairable) unrepairable.push_back(static_cast<int>(i));
    }

    auto check_unrepairable = [&]() {
        for (int i : unrepairable) {
            const auto& c = psi.clauses[static_cast<std::size_t>(i)];
            std::vector<EdgeConstraint> cs;
            for (auto [a, b] : c.preq_index_edges()) cs.push_back({a, b, true});
            // Only prerequisite variables matter for applicability.
            if (find_assignment(t, static_cast<int>(c.variables.size()), cs))
                throw ApplicableFalseClauseError(
                    "saturate: clause " + std::to_string(i) +
                    " (" + to_string(c) + ") matched the tree");
        }
    };

    HornFormula repairable;
    std::vector<int> repairable_index;
    for (std::size_t i = 0; i < psi.clauses.size(); ++i) {
        bool bad = false;
        for (int u : unrepairable) bad |= (u == static_cast<int>(i));
        if (!bad) {
            repairable.clauses.push_back(psi.clauses[i]);
            repairable_index.push_back(static_cast<int>(i));
        }
    }

    check_unrepairable();
    for (;;) {
        auto viol = find_violation(t, repairable);
        if (!viol) break;
        const auto& c = repairable.clauses[static_cast<std::size_t>(viol->clause_index)];
        int u = viol->assignment[c.var_index(c.conclusion.x)];
        int v = viol->assignment[c.var_index(c.conclusion.y)];
        // the image edge must already exist because the target satisfies psi
        if (!out.target.graph.edge(out.map[u], out.map[v]))
            throw std::logic_error("saturate: inserted edge has no image in the target");
        t.add_edge(u, v);
        check_unrepairable();
    }
    return out;
}

} // namespace hornmodal
