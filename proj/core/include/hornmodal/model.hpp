#ifndef HORNMODAL_MODEL_HPP
#define HORNMODAL_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hornmodal/formula.hpp"
#include "hornmodal/graph.hpp"

namespace hornmodal {

// A graph plus a propositional valuation. Variables absent from the valuation
// are false everywhere.
struct KripkeModel {
    Graph graph;
    std::map<std::string, std::vector<int>> valuation; // world ids, sorted
    std::optional<int> root;

    bool var_true_at(const std::string& name, int world) const;
    void set_true(const std::string& name, int world);

    // Restriction to `keep` (induced subgraph, valuation filtered and
    // renumbered). keep[i] becomes world i.
    KripkeModel restrict_to(const std::vector<int>& keep) const;
};

// Standard satisfaction: a diamond is true at w iff some successor satisfies
// the child formula.
bool eval_modal(const KripkeModel& m, int world, const FormulaPtr& phi);

// Truth of phi at every world, computed bottom-up over subformulas.
std::vector<char> eval_all_worlds(const KripkeModel& m, const FormulaPtr& phi);

} // namespace hornmodal

#endif // HORNMODAL_MODEL_HPP
