#pragma once

#include "gloves/state.hpp"

namespace gloves {

enum class ExchangeSymmetry { Symmetric, Antisymmetric };

// Projects onto the (anti)symmetric sector of one exchange group:
//   (1/n!) sum_pi sgn(pi)^a  P_pi |state>
// where P_pi permutes the factor slots listed in group. The group must
// consist of identical factors; members may be given in any order.
StateVector permutation_project(const StateVector& state,
                                const std::vector<int>& group,
                                ExchangeSymmetry symmetry);

}  // namespace gloves
