#include "gloves/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gloves {

FactorSpec FactorSpec::orbital(int l_max) {
  if (l_max < 0) throw DomainError("orbital cutoff must be nonnegative");
  return FactorSpec{FactorKind::Orbital, l_max};
}

FactorSpec FactorSpec::spin_half() {
  return FactorSpec{FactorKind::SpinHalf, 0};
}

int FactorSpec::dimension() const {
  if (kind == FactorKind::SpinHalf) return 2;
  return (l_max + 1) * (l_max + 1);  // sum of 2l+1 for l = 0..l_max
}

SpaceSpec::SpaceSpec(std::vector<FactorSpec> f,
                     std::vector<std::vector<int>> groups)
    : factors(std::move(f)), exchange_groups(std::move(groups)) {
  if (factors.empty()) throw DimensionError("space needs at least one factor");
  std::set<int> seen;
  for (const auto& g : exchange_groups) {
    if (g.size() < 2)
      throw DimensionError("exchange group needs at least two factors");
    for (int i : g) {
      if (i < 0 || i >= static_cast<int>(factors.size()))
        throw DimensionError("exchange group index out of range");
      if (!seen.insert(i).second)
        throw DimensionError("exchange groups must be disjoint");
      if (!(factors[i] == factors[g[0]]))
        throw DimensionError("exchange group factors must be identical");
      if (factors[i].kind != FactorKind::Orbital)
        throw DimensionError("exchange groups are defined for orbital factors");
    }
  }
  long long dim = 1;
  for (const auto& fac : factors) {
    dim *= fac.dimension();
    if (dim > kDimensionCap)
      throw CapacityError("space dimension exceeds cap of " +
                          std::to_string(kDimensionCap));
  }
}

int SpaceSpec::dimension() const {
  long long dim = 1;
  for (const auto& fac : factors) dim *= fac.dimension();
  return static_cast<int>(dim);
}

std::string SpaceSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out << ',';
    if (factors[i].kind == FactorKind::SpinHalf)
      out << "spin";
    else
      out << "orb" << factors[i].l_max;
  }
  return out.str();
}

bool operator<(const FactorLabel& a, const FactorLabel& b) {
  if (a.two_j != b.two_j) return a.two_j < b.two_j;
  return a.two_m > b.two_m;  // m runs from +j down to -j
}

bool label_less(const BasisLabel& a, const BasisLabel& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<BasisLabel> enumerate_basis(const SpaceSpec& space) {
  std::vector<std::vector<FactorLabel>> per_factor;
  per_factor.reserve(space.factors.size());
  for (const auto& fac : space.factors) {
    std::vector<FactorLabel> opts;
    if (fac.kind == FactorKind::SpinHalf) {
      opts.push_back({1, 1});
      opts.push_back({1, -1});
    } else {
      for (int l = 0; l <= fac.l_max; ++l)
        for (int two_m = 2 * l; two_m >= -2 * l; two_m -= 2)
          opts.push_back({2 * l, two_m});
    }
    per_factor.push_back(std::move(opts));
  }
  std::vector<BasisLabel> out;
  out.reserve(space.dimension());
  BasisLabel current(space.factors.size());
  // odometer over factor options, leftmost most significant
  std::vector<std::size_t> pos(space.factors.size(), 0);
  const std::size_t n = space.factors.size();
  while (true) {
    for (std::size_t i = 0; i < n; ++i) current[i] = per_factor[i][pos[i]];
    out.push_back(current);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++pos[k] < per_factor[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::map<BasisLabel, int, LabelOrder> basis_index(const SpaceSpec& space) {
  std::map<BasisLabel, int, LabelOrder> index;
  auto basis = enumerate_basis(space);
  for (int i = 0; i < static_cast<int>(basis.size()); ++i)
    index.emplace(std::move(basis[i]), i);
  return index;
}

void check_label(const SpaceSpec& space, const BasisLabel& label) {
  if (label.size() != space.factors.size())
    throw DimensionError("label has " + std::to_string(label.size()) +
                         " entries for a space with " +
                         std::to_string(space.factors.size()) + " factors");
  for (std::size_t i = 0; i < label.size(); ++i) {
    const auto& fac = space.factors[i];
    const auto& fl = label[i];
    if (fac.kind == FactorKind::SpinHalf) {
      if (fl.two_j != 1 || (fl.two_m != 1 && fl.two_m != -1))
        throw DimensionError("bad spin label at factor " + std::to_string(i));
    } else {
      if (fl.two_j < 0 || fl.two_j % 2 != 0 || fl.two_j > 2 * fac.l_max)
        throw DimensionError("orbital l out of range at factor " +
                             std::to_string(i));
      if (fl.two_m % 2 != 0 || std::abs(fl.two_m) > fl.two_j)
        throw DimensionError("orbital m out of range at factor " +
                             std::to_string(i));
    }
  }
}

std::string label_to_string(const BasisLabel& label) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out << ' ';
    if (label[i].two_j % 2 == 0) {
      out << 'Y' << label[i].two_j / 2 << ',' << label[i].two_m / 2;
    } else {
      out << (label[i].two_m > 0 ? "up" : "dn");
    }
  }
  out << ')';
  return out.str();
}

int label_parity(const BasisLabel& label) {
  int p = 1;
  for (const auto& fl : label)
    if (fl.two_j % 2 == 0 && (fl.two_j / 2) % 2 != 0) p = -p;
  return p;
}

}  // namespace gloves
