#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gloves/catalog.hpp"
#include "gloves/rotate.hpp"

namespace gloves {

// What happens between Alice's preparation and Bob's measurement. The channel
// either scrambles the frame with a fresh Haar rotation per trial, applies one
// fixed rotation, or passes the state through untouched; setting both rotation
// fields is rejected. bob_opposite_chirality models the mismatched-handedness
// run: the transmitted state is parity conjugated, which is the same thing as
// Bob conjugating his measurement.
struct ChannelConfig {
  bool random_rotation = false;
  std::optional<EulerAngles> fixed_rotation;
  bool bob_opposite_chirality = false;

  std::string to_string() const;  // compact echo used in reports and CSV
};

// Bob's measurement. GloveBasis is the protocol's own three-outcome
// measurement {Pi+, Pi-, rest}; Helstrom replaces it with the optimal
// two-outcome discrimination of the rotation-averaged hands, the ceiling the
// basis measurement is compared against.
enum class MeasurementMode { GloveBasis, Helstrom };

struct SimReport {
  std::string entry_id;
  ChannelConfig config;
  int trials = 0;
  long long successes = 0;
  double frequency = 0.0;       // successes / trials
  double standard_error = 0.0;  // sqrt(f (1-f) / trials)
  std::uint64_t seed = 0;
};

// Exact Born weights of Bob's three outcomes for one received state.
struct OutcomeProbabilities {
  double plus = 0.0;
  double minus = 0.0;
  double rest = 0.0;
};

OutcomeProbabilities glove_basis_probabilities(const GlovePair& pair,
                                               const StateVector& received);

// Runs the exchange `trials` times: Alice prepares the "+" hand (parity
// conjugated when chiralities differ), the channel rotates it per `config`,
// Bob measures and infers the relative handedness. Success means a correct
// inference; the "rest" outcome counts as failure. Trial t draws its rotation
// and its outcome from the stream seeded by derive_seed(seed, t), so the
// report is bit-identical however trials are partitioned across workers.
SimReport simulate_exchange(const CatalogEntry& entry,
                            const ChannelConfig& config, int trials,
                            std::uint64_t seed,
                            MeasurementMode mode = MeasurementMode::GloveBasis);

// How much orientation information one transmitted hand leaks: the Helstrom
// success probability for telling the unrotated "+" representative from its
// rotation by `angles`. 1/2 means the carrier is rotation invariant and leaks
// nothing. Supported for state pairs and for projector pairs with L > 0.
double fixed_frame_information_check(const CatalogEntry& entry,
                                     const EulerAngles& angles);

// Everything a transmission costs, reproducible from the catalog entry alone.
struct ResourceReport {
  std::string entry_id;
  int particle_count = 0;  // includes the implicit reference particle
  std::vector<std::string> factor_kinds;  // "orbital" / "spin" per factor
  double qubits = 0.0;                    // frame-free memory per transmission
  std::vector<int> lmax;                  // per orbital factor
  bool perfect = false;
};

ResourceReport resource_report(const CatalogEntry& entry);

}  // namespace gloves
