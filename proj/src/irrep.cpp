#include "gloves/irrep.hpp"

#include <algorithm>
#include <cmath>

#include "gloves/angular.hpp"

namespace gloves {

namespace {

// (two_j, parity) content of a single factor, j ascending.
std::vector<std::pair<int, int>> factor_sectors(const FactorSpec& factor) {
  if (factor.kind == FactorKind::SpinHalf) return {{1, 1}};
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l <= factor.l_max; ++l)
    out.push_back({2 * l, l % 2 == 0 ? 1 : -1});
  return out;
}

struct PartialBlock {
  int two_J;
  int parity;
  std::vector<StateVector> basis;  // M = J..-J
};

// copies state terms onto an identical-factor space (used to restore the
// caller's exchange_groups, which play no role in the coupling itself)
StateVector rehome(const StateVector& state, const SpaceSpec& target) {
  StateVector out{target};
  for (const auto& [label, amp] : state.terms()) out.set(label, amp);
  return out;
}

}  // namespace

const StateVector& IrrepBlock::vector(int two_M) const {
  const int idx = (two_L - two_M) / 2;
  if (two_M > two_L || two_M < -two_L || (two_L - two_M) % 2 != 0 || idx < 0 ||
      idx >= static_cast<int>(basis.size()))
    throw DomainError("two_M outside this block");
  return basis[idx];
}

SectorTable Decomposition::sector_multiplicities() const {
  SectorTable table;
  for (const auto& block : blocks) ++table[{block.two_L, block.parity}];
  return table;
}

const IrrepBlock* Decomposition::find(int two_L, int parity,
                                      int copy_index) const {
  for (const auto& block : blocks)
    if (block.two_L == two_L && block.parity == parity &&
        block.copy_index == copy_index)
      return &block;
  return nullptr;
}

Decomposition decompose(const SpaceSpec& space) {
  if (space.dimension() > kDimensionCap)
    throw CapacityError("decompose: space dimension exceeds cap");

  // seed with the first factor's sectors
  std::vector<PartialBlock> acc;
  {
    SpaceSpec head{{space.factors[0]}};
    for (const auto& [two_j, parity] : factor_sectors(space.factors[0])) {
      PartialBlock block{two_j, parity, {}};
      for (int two_m = two_j; two_m >= -two_j; two_m -= 2)
        block.basis.push_back(basis_state(head, {{two_j, two_m}}));
      acc.push_back(std::move(block));
    }
  }

  // couple one factor at a time
  for (std::size_t f = 1; f < space.factors.size(); ++f) {
    std::vector<FactorSpec> prefix(space.factors.begin(),
                                   space.factors.begin() + f + 1);
    SpaceSpec prefix_space{prefix};
    SpaceSpec tail{{space.factors[f]}};
    std::vector<PartialBlock> next;
    for (const auto& left : acc) {
      for (const auto& [two_j2, parity2] : factor_sectors(space.factors[f])) {
        for (int two_J = std::abs(left.two_J - two_j2);
             two_J <= left.two_J + two_j2; two_J += 2) {
          PartialBlock block{two_J, left.parity * parity2, {}};
          for (int two_M = two_J; two_M >= -two_J; two_M -= 2) {
            StateVector v{prefix_space};
            for (int two_m1 = left.two_J; two_m1 >= -left.two_J; two_m1 -= 2) {
              const int two_m2 = two_M - two_m1;
              if (std::abs(two_m2) > two_j2) continue;
              const double cg = clebsch_gordan(left.two_J, two_m1, two_j2,
                                               two_m2, two_J, two_M);
              if (cg == 0.0) continue;
              v += cplx{cg, 0.0} *
                   tensor(left.basis[(left.two_J - two_m1) / 2],
                          basis_state(tail, {{two_j2, two_m2}}));
            }
            block.basis.push_back(std::move(v));
          }
          next.push_back(std::move(block));
        }
      }
    }
    acc = std::move(next);
  }

  // stabilize copies inside each (L, parity) sector: subtract earlier copies
  // with one M-averaged coefficient per pair, then renormalize, so every
  // copy keeps identical ladder phases
  std::map<std::pair<int, int>, std::vector<PartialBlock*>> sectors;
  for (auto& block : acc) sectors[{block.two_J, block.parity}].push_back(&block);
  for (auto& [key, members] : sectors) {
    const int count = static_cast<int>(members.size());
    const int nm = key.first + 1;  // 2L+1 M values
    for (int i = 0; i < count; ++i) {
      for (int k = 0; k < i; ++k) {
        cplx overlap{0.0, 0.0};
        for (int m = 0; m < nm; ++m)
          overlap +=
              inner_product(members[k]->basis[m], members[i]->basis[m]);
        overlap /= static_cast<double>(nm);
        if (std::abs(overlap) <= kPruneTol) continue;
        for (int m = 0; m < nm; ++m)
          members[i]->basis[m] -= overlap * members[k]->basis[m];
      }
      double nsq = 0.0;
      for (int m = 0; m < nm; ++m) {
        const double n = norm(members[i]->basis[m]);
        nsq += n * n;
      }
      const double scale = std::sqrt(nsq / nm);
      if (scale < kBlockTol)
        throw DomainError("decompose: degenerate copy in coupling");
      for (int m = 0; m < nm; ++m)
        members[i]->basis[m] *= cplx{1.0 / scale, 0.0};
    }
  }

  // deterministic order: L descending, parity +1 first, construction order
  std::stable_sort(acc.begin(), acc.end(),
                   [](const PartialBlock& a, const PartialBlock& b) {
                     if (a.two_J != b.two_J) return a.two_J > b.two_J;
                     return a.parity > b.parity;
                   });

  Decomposition out{space, {}};
  SectorTable counts;
  for (auto& block : acc) {
    IrrepBlock ib{block.two_J, block.parity,
                  counts[{block.two_J, block.parity}]++, {}};
    ib.basis.reserve(block.basis.size());
    for (auto& v : block.basis) ib.basis.push_back(rehome(v, space));
    out.blocks.push_back(std::move(ib));
  }
  return out;
}

ExistenceReport glove_existence(const SpaceSpec& space) {
  if (space.dimension() > kDimensionCap)
    throw CapacityError("glove_existence: space dimension exceeds cap");

  // exact integer coupling of (two_j, parity) multiplicities
  std::map<std::pair<int, int>, long long> content;
  for (const auto& [two_j, parity] : factor_sectors(space.factors[0]))
    ++content[{two_j, parity}];
  for (std::size_t f = 1; f < space.factors.size(); ++f) {
    std::map<std::pair<int, int>, long long> next;
    for (const auto& [sector, count] : content)
      for (const auto& [two_j2, parity2] : factor_sectors(space.factors[f]))
        for (int two_J = std::abs(sector.first - two_j2);
             two_J <= sector.first + two_j2; two_J += 2)
          next[{two_J, sector.second * parity2}] += count;
    content = std::move(next);
  }

  ExistenceReport report{space, {}, false, false};
  for (const auto& [sector, count] : content)
    report.multiplicity[sector] = static_cast<int>(count);
  for (const auto& [sector, count] : content) {
    if (sector.second != 1) continue;
    auto odd = content.find({sector.first, -1});
    if (odd == content.end()) continue;
    report.perfect_subspace_glove = true;
    if (sector.first == 0) report.perfect_invariant_state_glove = true;
  }
  return report;
}

}  // namespace gloves
