#ifndef HORNMODAL_MORPHISM_HPP
#define HORNMODAL_MORPHISM_HPP

#include <vector>

#include "hornmodal/hom.hpp"
#include "hornmodal/model.hpp"

namespace hornmodal {

// A function between models. The three defining conditions:
//   (i)  w and map[w] satisfy the same propositional variables,
//   (ii) edges map to edges,
//   (iii) every successor of map[w] is the image of some successor of w.
struct BoundedMorphism {
    KripkeModel source;
    KripkeModel target;
    std::vector<int> map;
};

bool morphism_preserves_valuation(const BoundedMorphism& f);
bool morphism_is_homomorphism(const BoundedMorphism& f);
bool back_condition_at(const BoundedMorphism& f, int w);

// Checks (i)-(iii); when node_depths is given, (iii) is only required at
// nodes with depth < back_depth_limit.
bool is_bounded_morphism(const BoundedMorphism& f,
                         const std::vector<int>* node_depths = nullptr,
                         int back_depth_limit = -1);

// ── Unraveling ──────────────────────────────────────────────────────────────
// The tree of all walks from w of length <= depth; each tree node maps to the
// endpoint of its walk, with the valuation pulled back. Conditions (i) and
// (ii) hold everywhere, (iii) at every node of tree depth < depth.
struct UnravelResult {
    BoundedMorphism morphism; // morphism.source is the tree, root world 0
    std::vector<int> depth;   // tree depth per node
};

UnravelResult unravel(const KripkeModel& m, int w, int depth);

// ── Saturation ──────────────────────────────────────────────────────────────
// Repairs clause violations in the tree by inserting the violated conclusion
// edge, lexicographically least (clause index, assignment) first, until psi
// holds. The map never changes; every inserted edge is checked to have an
// image edge in the target.
//
// Preconditions: horn_holds(target, psi); every clause of psi applicable to
// the tree must have an edge conclusion on variables with x = y or x, y in
// the prerequisite graph and connected there (otherwise
// ApplicableFalseClauseError).
BoundedMorphism saturate(const BoundedMorphism& f, const HornFormula& psi);

} // namespace hornmodal

#endif // HORNMODAL_MORPHISM_HPP
