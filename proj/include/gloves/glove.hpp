#pragma once

#include "gloves/irrep.hpp"
#include "gloves/op.hpp"

namespace gloves {

enum class GloveKind { StatePair, ProjectorPair };

// A matched pair of chirality carriers: two orthogonal objects exchanged by
// parity and individually preserved by rotations (perfect pairs), or two
// plain states exchanged by parity (the approximate two-particle pair).
//
// Perfect pairs come from construct_glove_pair: bases
//   plus[M]  = (even[M] + odd[M]) / sqrt(2)
//   minus[M] = (even[M] - odd[M]) / sqrt(2)
// where even/odd are same-L, opposite-parity irrep copies. L = 0 gives a
// StatePair, L > 0 a ProjectorPair onto the two spans.
struct GlovePair {
  GloveKind kind = GloveKind::StatePair;
  SpaceSpec space;
  // doubled L of the carrier blocks; -1 when the pair is not built from a
  // single-L sector (approximate pairs)
  int two_L = 0;
  std::vector<StateVector> plus_basis;   // M = L..-L, or a single state
  std::vector<StateVector> minus_basis;

  int rank() const { return static_cast<int>(plus_basis.size()); }
  // state exported for StatePairs and used to seed transmissions: the
  // highest-M basis vector
  const StateVector& representative_plus() const { return plus_basis.front(); }
  const StateVector& representative_minus() const {
    return minus_basis.front();
  }
  LinearOperator projector_plus() const;
  LinearOperator projector_minus() const;
};

// Builds the pair from two same-L, opposite-parity blocks of one space.
// Throws DimensionError for mismatched spaces or L, DomainError when the
// parities are not one +1 and one -1 or a block is malformed.
GlovePair construct_glove_pair(const IrrepBlock& even_block,
                               const IrrepBlock& odd_block,
                               const SpaceSpec& space);

// Pairs two orthonormal parity-exchanged states directly (approximate
// gloves). Validates orthogonality and P|plus> = |minus| up to phase.
GlovePair glove_pair_from_states(StateVector plus, StateVector minus);

// Chirality observable gamma_plus (Pi+ - Pi-): eigenvalue +gamma_plus on the
// plus carrier, -gamma_plus on the minus carrier, 0 elsewhere. The two
// eigenvalues are opposite by construction; gamma_plus must be nonzero.
LinearOperator chirality_operator(const GlovePair& pair, double gamma_plus);

}  // namespace gloves
