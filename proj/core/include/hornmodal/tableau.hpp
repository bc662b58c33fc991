#ifndef HORNMODAL_TABLEAU_HPP
#define HORNMODAL_TABLEAU_HPP

#include <cstdint>
#include <deque>
#include <vector>

#include "hornmodal/formula.hpp"
#include "hornmodal/horn.hpp"
#include "hornmodal/solver.hpp"

namespace hornmodal {

struct TableauOptions {
    // Restrict clause checking to the sliding ancestor window while the tree
    // is being built. Off by default so correctness never depends on it;
    // results are identical either way.
    bool window = false;
    std::uint64_t node_cap = 500'000;
    std::uint64_t step_cap = 200'000'000ULL;
};

// Indexed subformula table shared by the tableau machinery.
struct SubformulaTable {
    std::vector<FormulaPtr> subs;
    std::vector<int> lhs, rhs;   // child indices, -1 if none
    std::vector<int> md;
    std::vector<int> diamonds;   // subformula indices of diamond nodes

    explicit SubformulaTable(const FormulaPtr& phi);
    int size() const { return static_cast<int>(subs.size()); }
    int index_of(const FormulaPtr& f) const; // -1 if absent
};

// Truth claims attached to one tableau node: a value for every subformula
// within the node's depth budget, plus the two edge flags.
struct Annotation {
    const SubformulaTable* table = nullptr;
    int budget = 0;
    std::vector<signed char> truth; // 1/0 inside the budget, -1 outside
    bool reflexive = false;
    bool back_symmetric = false;
    const Annotation* parent = nullptr;

    bool in_budget(int sub) const { return table->md[static_cast<std::size_t>(sub)] <= budget; }
};

// Local consistency: exactly one of each claim and its negation inside the
// budget, conjunctions/disjunctions coherent with their parts, a reflexive
// node never claims a formula and rejects its diamond, and a back-symmetric
// node never rejects a diamond whose child formula its parent claims.
bool verify_cons(const Annotation& a);

// One constructed tableau node. Edges of the encoded model: parent->child
// tree edges, a loop when reflexive, child->parent when back_symmetric.
struct TabNode {
    int parent = -1;
    int level = 0;
    bool reflexive = false;
    bool back_symmetric = false;
    std::vector<signed char> truth;
    std::vector<int> children;
    bool evicted = false;
};

struct TableauTree {
    const SubformulaTable* table = nullptr;
    // deque: growing the tree never invalidates references to live nodes
    std::deque<TabNode> nodes;

    bool edge(int u, int v) const;
    // Nodes within `radius` undirected tree steps of v, skipping evicted ones.
    std::vector<int> window(int v, int radius) const;
};

// Per-clause enforcement data derived from the frame conditions.
struct PsiContext {
    struct Component {
        int clause = -1;
        std::vector<int> vars; // clause variable indices
        std::vector<std::pair<int, int>> edges; // positions within vars
    };
    enum class ClauseKind { ForcesReflexive, EdgeConclusion, Unfixable };
    struct ClauseInfo {
        ClauseKind kind;
        int conc_component = -1;   // global component index (EdgeConclusion)
        int conc_x_pos = -1, conc_y_pos = -1; // positions within that component
        std::vector<int> components; // global component indices
    };

    HornFormula psi;
    int radius = 1; // largest component size
    std::vector<Component> components;
    std::vector<ClauseInfo> clauses;

    static PsiContext build(const HornFormula& psi);
};

// Clause checks around node v against the current tree, under the given
// component-realizability guesses. False prunes the search branch.
bool verify_horn(const TableauTree& tree, int v, const PsiContext& ctx,
                 const std::vector<char>& guesses);

// Backtracking tableau for frame conditions whose classification tracks only
// reflexivity/symmetry. Requires the classification verdict to be the
// tree-compatible one (UnsupportedLogicError otherwise).
SatResult sat_tableau(const HornFormula& psi, const FormulaPtr& phi,
                      const TableauOptions& opts = {});

} // namespace hornmodal

#endif // HORNMODAL_TABLEAU_HPP
