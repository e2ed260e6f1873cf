#pragma once

#include <map>
#include <string>
#include <vector>

#include "gloves/types.hpp"

namespace gloves {

// All angular momentum quantum numbers are stored doubled (two_j = 2j,
// two_m = 2m) so half-integer values stay exact integers.

enum class FactorKind { Orbital, SpinHalf };

struct FactorSpec {
  FactorKind kind = FactorKind::Orbital;
  int l_max = 0;  // meaningful for Orbital only

  static FactorSpec orbital(int l_max);
  static FactorSpec spin_half();

  int dimension() const;
  bool operator==(const FactorSpec&) const = default;
};

struct SpaceSpec {
  std::vector<FactorSpec> factors;
  // Optional partition of factor indices declared exchangeable. Groups must be
  // disjoint and contain Orbital factors of equal l_max only.
  std::vector<std::vector<int>> exchange_groups;

  explicit SpaceSpec(std::vector<FactorSpec> f = {},
                     std::vector<std::vector<int>> groups = {});

  int dimension() const;  // product of factor dimensions, capped
  bool operator==(const SpaceSpec&) const = default;
  std::string to_string() const;  // mini-language, e.g. "orb1,orb1,spin"
};

// One tensor factor of a basis label: an exact (2j, 2m) pair. Orbital factors
// carry two_j = 2l (even); spin factors carry two_j = 1, two_m = +-1.
struct FactorLabel {
  int two_j = 0;
  int two_m = 0;

  bool operator==(const FactorLabel&) const = default;
};

// Canonical label ordering: j ascending, then m from +j down to -j. This is
// the same row order used for rotation matrices and irrep block bases.
bool operator<(const FactorLabel& a, const FactorLabel& b);

using BasisLabel = std::vector<FactorLabel>;

bool label_less(const BasisLabel& a, const BasisLabel& b);

struct LabelOrder {
  bool operator()(const BasisLabel& a, const BasisLabel& b) const {
    return label_less(a, b);
  }
};

// Full product basis in canonical order (leftmost factor most significant).
std::vector<BasisLabel> enumerate_basis(const SpaceSpec& space);

// Dense index of each label, inverse of enumerate_basis ordering.
std::map<BasisLabel, int, LabelOrder> basis_index(const SpaceSpec& space);

// Throws DimensionError unless the label is well formed for the space.
void check_label(const SpaceSpec& space, const BasisLabel& label);

std::string label_to_string(const BasisLabel& label);

// Parity eigenvalue of a product basis state: (-1)^l per orbital factor,
// spin factors are untouched.
int label_parity(const BasisLabel& label);

}  // namespace gloves
