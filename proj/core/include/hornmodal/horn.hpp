#ifndef HORNMODAL_HORN_HPP
#define HORNMODAL_HORN_HPP

#include <string>
#include <utility>
#include <vector>

namespace hornmodal {

// ── Frame-condition clauses ─────────────────────────────────────────────────
// A clause is a universally quantified implication over edge atoms:
//     x1 R y1, ..., xn R yn  ->  x R y        (or -> false)
// The body is kept as a graph on the clause's variable names (the
// prerequisite graph); the head is a single edge or FALSE. Variables are
// clause-local.

struct Conclusion {
    bool is_false = false;
    std::string x, y; // meaningful iff !is_false

    bool operator==(const Conclusion&) const = default;
};

struct HornClause {
    // All names appearing in the clause, in order of first appearance.
    std::vector<std::string> variables;
    // Prerequisite edges, duplicates collapsed, insertion order retained.
    std::vector<std::pair<std::string, std::string>> preq_edges;
    Conclusion conclusion;

    bool operator==(const HornClause&) const = default;

    int var_index(const std::string& name) const; // -1 if absent
    bool in_preq(const std::string& name) const;

    // Prerequisite edges as index pairs into `variables`.
    std::vector<std::pair<int, int>> preq_index_edges() const;

    // Connected components (undirected) of the prerequisite graph, as sorted
    // variable-index lists. Variables outside the prerequisite graph form no
    // component.
    std::vector<std::vector<int>> preq_components() const;

    // True iff the conclusion is an edge whose endpoints both lie in the
    // prerequisite graph and are joined by an undirected path there.
    bool conclusion_connected_in_preq() const;
};

struct HornFormula {
    std::vector<HornClause> clauses; // input order is semantically relevant

    bool operator==(const HornFormula&) const = default;
    bool empty() const { return clauses.empty(); }
};

std::string to_string(const HornClause& c);
std::string to_string(const HornFormula& f);

// Ready-made clauses for the usual frame conditions.
HornClause refl_clause();                    // -> x R x
HornClause symm_clause();                    // x R y -> y R x
HornClause trans_clause();                   // x R y, y R z -> x R z
HornClause euclid_clause();                  // w R x, w R y -> x R y
// Chain of k steps followed by a chain of l steps from a shared start; the
// conclusion joins the two endpoints. k = l = 1 is the Euclidean condition,
// l = 0 concludes back into the shared start.
HornClause chain_pair_clause(int k, int l);

} // namespace hornmodal

#endif // HORNMODAL_HORN_HPP
