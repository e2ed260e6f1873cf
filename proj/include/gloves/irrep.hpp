#pragma once

#include <map>
#include <optional>

#include "gloves/state.hpp"

namespace gloves {

// One copy of the total angular momentum L irrep inside a product space.
// basis holds the 2L+1 states |L, M> in M = L..-L order, sharing rotation
// phases with every other copy so that block-diagonal group averages can
// pair copies directly.
struct IrrepBlock {
  int two_L = 0;
  int parity = 1;
  int copy_index = 0;
  std::vector<StateVector> basis;

  int dim() const { return two_L + 1; }
  const StateVector& vector(int two_M) const;  // lookup by doubled M
};

// Multiplicity table keyed by (two_L, parity).
using SectorTable = std::map<std::pair<int, int>, int>;

struct Decomposition {
  SpaceSpec space;
  std::vector<IrrepBlock> blocks;  // sorted: L descending, parity +1 first

  SectorTable sector_multiplicities() const;
  const IrrepBlock* find(int two_L, int parity, int copy_index) const;
};

// Splits the product space into irreducible blocks by coupling factors left
// to right through Clebsch-Gordan coefficients, then re-orthonormalizing
// copies within each (L, parity) sector with M-averaged Gram-Schmidt
// coefficients (a same-coefficient-for-all-M pass, so ladder phases shared
// across copies survive). Deterministic: same space, same blocks, same
// order, same phases.
Decomposition decompose(const SpaceSpec& space);

// Whether perfect gloves exist on the space, from exact integer multiplicity
// counting (no floating point).
struct ExistenceReport {
  SpaceSpec space;
  SectorTable multiplicity;
  // some L carries both parities: an orthogonal rotation-invariant
  // subspace pair exchanged by parity exists
  bool perfect_subspace_glove = false;
  // L = 0 carries both parities: a rotation-invariant state pair exists
  bool perfect_invariant_state_glove = false;
};

ExistenceReport glove_existence(const SpaceSpec& space);

}  // namespace gloves
