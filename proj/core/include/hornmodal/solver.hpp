#ifndef HORNMODAL_SOLVER_HPP
#define HORNMODAL_SOLVER_HPP

#include <cstdint>
#include <optional>

#include "hornmodal/model.hpp"

namespace hornmodal {

enum class SatStatus { Sat, UnsatWithinBound, Unsat };
enum class Engine { Oracle, Tableau };

struct SatStats {
    std::uint64_t nodes_explored = 0;
    int max_depth = 0;
};

// Every Sat carries a model that has been re-checked against both the modal
// formula and the frame conditions before being returned.
struct SatResult {
    SatStatus status = SatStatus::UnsatWithinBound;
    Engine engine = Engine::Oracle;
    std::optional<KripkeModel> model;
    int world = -1;
    int bound = 0; // meaningful for UnsatWithinBound
    SatStats stats;
};

} // namespace hornmodal

#endif // HORNMODAL_SOLVER_HPP
