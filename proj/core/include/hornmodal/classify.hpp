#ifndef HORNMODAL_CLASSIFY_HPP
#define HORNMODAL_CLASSIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hornmodal/closure.hpp"
#include "hornmodal/graph.hpp"
#include "hornmodal/horn.hpp"
#include "hornmodal/trees.hpp"

namespace hornmodal {

// Search budgets. Zero means "derive from the clause and the current
// conditions": trees of |vars|*(K+1)+1 nodes and lines of |vars|*(K+1)+2
// edges, K = max(2, largest tracked transitivity). Explicit values are taken
// as-is; if an explicit value falls below the derived one, classification
// refuses to conclude (BoundsExhaustedError) rather than silently weakening
// the search.
struct Bounds {
    int tree_nodes = 0;
    int line_len = 0;
    int trans_cap = 64;
};

enum class StepCase {
    Np1, Np2, Np3, Np4,
    Reflexive, Transitive, Symmetric,
    SymmTransShortcut,
    AllSatisfied,
};

std::string to_string(StepCase c);

// A tree or line together with a variable assignment into it.
struct HomWitness {
    Graph graph;
    std::vector<int> depth;                 // level of each vertex
    std::map<std::string, int> assignment;  // clause variable -> vertex
};

struct TraceStep {
    int clause_index = -1; // -1 for the terminal all-satisfied step
    StepCase kind;
    int k = 0;             // transitivity degree, Transitive steps only
    std::vector<HomWitness> witnesses; // 0, 1 or (Np4) 2 entries
};

enum class Verdict { NpComplete, PSpaceHard };

struct ClassificationOutcome {
    Verdict verdict;
    TypesList types;
    std::vector<TraceStep> trace;
};

// Closure of S under k2 + l*(k1-1) for k1, k2 in the growing set, cut at cap;
// true iff k lands in the closure. Precondition: members of S and k are >= 2.
bool implied_transitivity(const std::set<int>& s, int k, int cap);

// First tree (fewest nodes, catalog order) on which the clause fails under
// the given conditions, with the lexicographically least failing assignment.
std::optional<HomWitness> violated_on_some_tree(const HornClause& c, const TypesList& t,
                                                const Bounds& b);

struct NpCaseResult {
    int condition; // 1..4
    std::vector<HomWitness> witnesses;
};

// Tests conditions 1-4 in order against trees/lines within bounds; first hit
// wins. Meaningful only when the clause is violated on some tree.
std::optional<NpCaseResult> np_case(const HornClause& c, const TypesList& t, const Bounds& b);

struct CaseKindResult {
    StepCase kind; // Reflexive | Transitive | Symmetric
    int k = 0;
    std::optional<HomWitness> witness;
};

// Decides which condition the clause forces, given that no NP condition
// matched. Throws WellDefinednessError if none of the three cases applies.
CaseKindResult case_kind(const HornClause& c, const TypesList& t, const Bounds& b);

// The full classification loop.
ClassificationOutcome classify(const HornFormula& psi, const Bounds& b = {});

} // namespace hornmodal

#endif // HORNMODAL_CLASSIFY_HPP
