#ifndef HORNMODAL_ORACLE_HPP
#define HORNMODAL_ORACLE_HPP

#include <cstdint>

#include "hornmodal/formula.hpp"
#include "hornmodal/horn.hpp"
#include "hornmodal/solver.hpp"

namespace hornmodal {

struct OracleOptions {
    // When set, exhausting the bound yields Unsat instead of UnsatWithinBound.
    // Only supply this when the bound is known sufficient for the logic.
    bool trusted_bound = false;
    std::uint64_t step_cap = 4'000'000'000ULL;
    int threads = 0; // 0 = hardware default (capped)
};

// Bounded model search: enumerates frames of 1..max_worlds vertices (one
// representative per isomorphism class up to 5 vertices), keeps those whose
// frame satisfies psi and that are rooted, and searches world labelings for a
// world satisfying phi. Deterministic: the least (size, frame, root,
// labeling) witness wins.
SatResult sat_oracle(const HornFormula& psi, const FormulaPtr& phi, int max_worlds,
                     const OracleOptions& opts = {});

} // namespace hornmodal

#endif // HORNMODAL_ORACLE_HPP
