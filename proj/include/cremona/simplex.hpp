#pragma once

#include <optional>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

// Feasibility of  sum_j x_j col_j = rhs,  x >= 0,  in exact rational
// arithmetic: phase-one simplex with Bland's rule, so no cycling and no
// tolerances.  Returns a basic solution (at most rhs.size() nonzeros) or
// nullopt when the system has no nonnegative solution.
std::optional<std::vector<Rat>> feasible_nonnegative_combination(
    const std::vector<std::vector<Rat>>& columns, const std::vector<Rat>& rhs);

}  // namespace cremona
