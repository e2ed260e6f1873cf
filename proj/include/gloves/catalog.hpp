#pragma once

#include <cstdint>
#include <string>

#include "gloves/glove.hpp"
#include "gloves/permute.hpp"

namespace gloves {

enum class Statistics { Fermi, Bose };

struct CatalogEntry {
  std::string id;
  SpaceSpec space;
  GlovePair pair;
  bool perfect = true;
  int particle_count = 0;
  std::string notes;
};

// Fully antisymmetric triple-P-wave scalar on three Orbital(1) factors
// (epsilon contraction of three l=1 states), the odd-parity half of the
// four-particle pair.
StateVector aharonov_state(const SpaceSpec& space);

// All three relative coordinates in S-waves, the even-parity half.
StateVector s_wave_triple(const SpaceSpec& space);

CatalogEntry four_particle_gloves();
CatalogEntry identical_particle_gloves(Statistics statistics);
CatalogEntry three_particle_projector_gloves();
CatalogEntry two_spin_gloves();
CatalogEntry spin_orbital_doublet_gloves();
CatalogEntry two_particle_approx_gloves();

// All entries in fixed order:
//   four_particle, identical_fermi, identical_bose,
//   three_particle_projector, two_spin, spin_orbital_doublet,
//   two_particle_approx
const std::vector<CatalogEntry>& catalog();

// Throws DomainError for an unknown id.
const CatalogEntry& find_entry(const std::string& id);

// One row of the invariant suite for an entry.
struct VerifyCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool larger_is_better = false;  // pass means value >= threshold
  bool pass = false;
};

// Runs the entry's invariant checks: orthogonality, normalization, parity
// swap, angular momentum labels, ladder phases, seeded rotation
// (in)variance, exchange projections for the identical-particle entries.
// rotation_samples Haar rotations are drawn from the seed.
std::vector<VerifyCheck> verify_entry(const CatalogEntry& entry,
                                      std::uint64_t seed = 0,
                                      int rotation_samples = 100,
                                      double tol = kCompareTol);

}  // namespace gloves
