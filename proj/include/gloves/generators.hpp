#pragma once

#include "gloves/op.hpp"

namespace gloves {

// Total angular momentum generators summed over all factors, in units of
// hbar = 1. Matrix elements are the standard ladder values
//   J+|j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>, Jz|j,m> = m |j,m>.
struct Generators {
  LinearOperator jz;
  LinearOperator jplus;
  LinearOperator jminus;
};

Generators angular_momentum_generators(const SpaceSpec& space);

// J^2 = J- J+ + Jz (Jz + 1), assembled from the sparse generators.
LinearOperator total_j_squared(const SpaceSpec& space);

}  // namespace gloves
