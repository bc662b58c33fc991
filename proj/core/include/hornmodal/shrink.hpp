#ifndef HORNMODAL_SHRINK_HPP
#define HORNMODAL_SHRINK_HPP

#include <vector>

#include "hornmodal/model.hpp"

namespace hornmodal {

struct ShrinkResult {
    KripkeModel model;       // restriction of the input, renumbered
    std::vector<int> worlds; // worlds[i] = original id of world i; worlds[0] maps w
};

// Restriction of m that still satisfies phi at w: starting from w, each kept
// world keeps one witnessing successor per diamond subformula it needs, out
// to depth modal_depth(phi). Requires eval_modal(m, w, phi).
ShrinkResult shrink(const KripkeModel& m, int w, const FormulaPtr& phi);

} // namespace hornmodal

#endif // HORNMODAL_SHRINK_HPP
