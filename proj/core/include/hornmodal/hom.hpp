#ifndef HORNMODAL_HOM_HPP
#define HORNMODAL_HOM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "hornmodal/graph.hpp"
#include "hornmodal/horn.hpp"

namespace hornmodal {

// ── Assignment search ───────────────────────────────────────────────────────
// All searches assign the m variables of a constraint graph to vertices of G,
// in fixed variable order with ascending vertex candidates, so the first hit
// is the lexicographically least assignment. Candidate sets are narrowed by
// intersecting adjacency rows of already-assigned neighbours.

struct EdgeConstraint {
    int from, to;      // variable indices
    bool required;     // true: edge must exist; false: edge must be absent
};

// Enumerates assignments satisfying all constraints; fn returning false stops
// the search. Returns true if the search was stopped by fn (i.e. a hit was
// accepted), false if it ran to completion.
bool for_each_assignment(const Graph& g, int num_vars,
                         const std::vector<EdgeConstraint>& constraints,
                         const std::function<bool(const std::vector<int>&)>& fn);

// First assignment satisfying the constraints, if any.
std::optional<std::vector<int>> find_assignment(const Graph& g, int num_vars,
                                                const std::vector<EdgeConstraint>& constraints);

// ── Clause semantics ────────────────────────────────────────────────────────

// Satisfaction by homomorphism search: an edge-conclusion clause holds iff
// every assignment realizing the prerequisite graph maps the conclusion pair
// to an edge; a FALSE-conclusion clause holds iff the prerequisite graph has
// no homomorphic image at all.
bool clause_holds(const Graph& g, const HornClause& c);

// Independent oracle: evaluates the universally quantified implication by
// enumerating all |V|^|vars| assignments. Slow by design; used to cross-check
// clause_holds.
bool fo_eval(const Graph& g, const HornClause& c);

bool horn_holds(const Graph& g, const HornFormula& f);

// First (clause index, lexicographically least assignment) pair witnessing a
// violation of some clause in f, or nullopt if f holds. The assignment covers
// all clause variables.
struct Violation {
    int clause_index;
    std::vector<int> assignment;
};
std::optional<Violation> find_violation(const Graph& g, const HornFormula& f);

// Constraint list for "the prerequisite graph embeds and the conclusion edge
// is absent" (edge conclusions) or "the prerequisite graph embeds" (FALSE
// conclusions).
std::vector<EdgeConstraint> violation_constraints(const HornClause& c);

} // namespace hornmodal

#endif // HORNMODAL_HOM_HPP
