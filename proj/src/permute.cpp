#include "gloves/permute.hpp"

#include <algorithm>
#include <numeric>

namespace gloves {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t k = i + 1; k < perm.size(); ++k)
      if (perm[i] > perm[k]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

StateVector permutation_project(const StateVector& state,
                                const std::vector<int>& group,
                                ExchangeSymmetry symmetry) {
  const auto& factors = state.space().factors;
  if (group.size() < 2)
    throw DimensionError("exchange group needs at least two factors");
  for (int i : group) {
    if (i < 0 || i >= static_cast<int>(factors.size()))
      throw DimensionError("exchange group index out of range");
    if (!(factors[i] == factors[group[0]]))
      throw DimensionError("exchange group factors must be identical");
  }

  const std::size_t n = group.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);

  StateVector out{state.space()};
  double total = 0.0;
  do {
    const int sign = symmetry == ExchangeSymmetry::Antisymmetric
                         ? permutation_sign(perm)
                         : 1;
    for (const auto& [label, amp] : state.terms()) {
      BasisLabel moved = label;
      for (std::size_t i = 0; i < n; ++i)
        moved[group[perm[i]]] = label[group[i]];
      out.accumulate(moved, static_cast<double>(sign) * amp);
    }
    total += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  out *= cplx{1.0 / total, 0.0};
  return out;
}

}  // namespace gloves
