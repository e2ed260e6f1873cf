#pragma once

#include <cstdint>
#include <string>

#include "gloves/catalog.hpp"
#include "gloves/irrep.hpp"

namespace gloves {

// Exact average of U(R) rho U(R)^dagger over Haar-random rotations, computed
// by projecting onto the rotation commutant: for every pair of same-L irrep
// copies (a, b), the block average (1/(2L+1)) sum_M <aM|rho|bM> survives and
// spreads uniformly over sum_M |aM><bM|; everything else vanishes. Copies of
// opposite parity pair up too: rotations alone do not see parity, which is
// exactly why parity-exchanged same-L copies keep their handedness through
// the average.
DensityMatrix haar_twirl_exact(const DensityMatrix& rho);

// Same projection on a raw operator (no density validation).
LinearOperator haar_twirl_exact_op(const LinearOperator& op);

// Plain Monte Carlo average over `samples` Haar rotations; sample i uses the
// angle stream seeded by derive_seed(seed, i). Agreement with the exact
// average scales like 1/sqrt(samples).
LinearOperator haar_twirl_monte_carlo(const LinearOperator& op, int samples,
                                      std::uint64_t seed);

// The state transmitted for one hand: the representative pure state for a
// StatePair, the normalized projector for a ProjectorPair. sign is +1 or -1.
DensityMatrix hand_state(const GlovePair& pair, int sign);

// Base-2 entropy of the equal mixture of the two twirled hands: how many
// qubits of frame-free quantum memory one transmission occupies.
double communication_cost(const DensityMatrix& twirled_plus,
                          const DensityMatrix& twirled_minus);

// Distinguishability and cost summary for a catalog entry's hands, before
// and after the rotation average. monte_carlo_samples = 0 skips the Monte
// Carlo cross-check.
struct TwirlReport {
  std::string entry_id;
  double trace_distance_before = 0.0;
  double trace_distance_after = 0.0;
  double helstrom_after = 0.0;       // 1/2 + trace_distance_after / 2
  double communication_qubits = 0.0;
  int monte_carlo_samples = 0;
  double monte_carlo_max_error = 0.0;  // max entry |exact - sampled|
};

TwirlReport twirl_report(const CatalogEntry& entry, int monte_carlo_samples = 0,
                         std::uint64_t seed = 0);

// The two-particle approximate pair admits a tempting closed form for its
// rotation average that keeps the interference cross term between the S- and
// P-wave components; it predicts the averaged hands stay distinguishable at
// trace distance 1/2. The exact average removes every cross-L coherence and
// leaves the two hands identical. Both versions side by side:
struct ApproxTwirlComparison {
  DensityMatrix closed_form_plus;
  DensityMatrix closed_form_minus;
  DensityMatrix exact_plus;
  DensityMatrix exact_minus;
  double closed_form_trace_distance = 0.0;  // 1/2
  double exact_trace_distance = 0.0;        // 0
};

ApproxTwirlComparison approx_pair_twirl_comparison();

}  // namespace gloves
