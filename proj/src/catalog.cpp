#include "gloves/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "gloves/generators.hpp"
#include "gloves/rotate.hpp"

namespace gloves {

namespace {

FactorLabel orb(int l, int m) { return FactorLabel{2 * l, 2 * m}; }
FactorLabel up() { return FactorLabel{1, 1}; }
FactorLabel down() { return FactorLabel{1, -1}; }

SpaceSpec three_orbitals(const std::vector<std::vector<int>>& groups = {}) {
  return SpaceSpec{{FactorSpec::orbital(1), FactorSpec::orbital(1),
                    FactorSpec::orbital(1)},
                   groups};
}

}  // namespace

StateVector s_wave_triple(const SpaceSpec& space) {
  StateVector s(space);
  s.set({orb(0, 0), orb(0, 0), orb(0, 0)}, 1.0);
  return s;
}

StateVector aharonov_state(const SpaceSpec& space) {
  StateVector a(space);
  const std::array<int, 3> base{1, 0, -1};
  std::array<int, 3> idx{0, 1, 2};
  const double amp = 1.0 / std::sqrt(6.0);
  do {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (idx[i] > idx[j]) ++inversions;
    const double sign = (inversions % 2 == 0) ? 1.0 : -1.0;
    a.accumulate({orb(1, base[idx[0]]), orb(1, base[idx[1]]),
                  orb(1, base[idx[2]])},
                 sign * amp);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return a;
}

CatalogEntry four_particle_gloves() {
  const SpaceSpec space = three_orbitals();
  IrrepBlock even{0, +1, 0, {s_wave_triple(space)}};
  IrrepBlock odd{0, -1, 0, {aharonov_state(space)}};
  return CatalogEntry{
      "four_particle",
      space,
      construct_glove_pair(even, odd, space),
      true,
      4,
      "Three relative coordinates of four distinguishable particles. The "
      "even hand superposes the all-S-wave state with the fully "
      "antisymmetric triple-P-wave scalar; the odd hand takes the "
      "difference."};
}

CatalogEntry identical_particle_gloves(Statistics statistics) {
  const SpaceSpec space = three_orbitals({{0, 1, 2}});
  IrrepBlock even{0, +1, 0, {s_wave_triple(space)}};
  IrrepBlock odd{0, -1, 0, {aharonov_state(space)}};
  const bool fermi = statistics == Statistics::Fermi;
  std::string notes =
      fermi ? "Three identical fermions around a distinguishable center. An "
              "antisymmetric radial tag rides the all-S-wave component and a "
              "symmetric radial tag rides the antisymmetric P-wave scalar, so "
              "the total state stays antisymmetric; the angular content "
              "equals the four-particle pair."
            : "Three identical bosons around a distinguishable center. A "
              "symmetric radial tag rides the all-S-wave component and an "
              "antisymmetric radial tag rides the antisymmetric P-wave "
              "scalar, keeping the total state symmetric; the angular "
              "content equals the four-particle pair.";
  return CatalogEntry{fermi ? "identical_fermi" : "identical_bose",
                      space,
                      construct_glove_pair(even, odd, space),
                      true,
                      4,
                      std::move(notes)};
}

CatalogEntry three_particle_projector_gloves() {
  const SpaceSpec space{{FactorSpec::orbital(1), FactorSpec::orbital(1)}, {}};
  const double r2 = 1.0 / std::sqrt(2.0);

  // Odd-parity L=1 multiplet: symmetrized S-wave x P-wave combinations.
  StateVector a1(space), a0(space), am(space);
  a1.set({orb(0, 0), orb(1, 1)}, r2);
  a1.set({orb(1, 1), orb(0, 0)}, r2);
  a0.set({orb(0, 0), orb(1, 0)}, r2);
  a0.set({orb(1, 0), orb(0, 0)}, r2);
  am.set({orb(0, 0), orb(1, -1)}, r2);
  am.set({orb(1, -1), orb(0, 0)}, r2);
  IrrepBlock odd{2, -1, 0, {a1, a0, am}};

  // Even-parity L=1 multiplet: antisymmetrized P-wave x P-wave.
  StateVector b1(space), b0(space), bm(space);
  b1.set({orb(1, 0), orb(1, 1)}, r2);
  b1.set({orb(1, 1), orb(1, 0)}, -r2);
  b0.set({orb(1, -1), orb(1, 1)}, r2);
  b0.set({orb(1, 1), orb(1, -1)}, -r2);
  bm.set({orb(1, -1), orb(1, 0)}, r2);
  bm.set({orb(1, 0), orb(1, -1)}, -r2);
  IrrepBlock even{2, +1, 0, {b1, b0, bm}};

  return CatalogEntry{
      "three_particle_projector",
      space,
      construct_glove_pair(even, odd, space),
      true,
      3,
      "Two relative coordinates of three particles. Rank-3 projectors onto "
      "two L=1 multiplets of opposite parity; no single invariant state "
      "exists here, but the projector pair is still exchanged by parity "
      "and fixed by rotations."};
}

CatalogEntry two_spin_gloves() {
  const SpaceSpec space{
      {FactorSpec::spin_half(), FactorSpec::spin_half(), FactorSpec::orbital(1)},
      {}};
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);

  StateVector alpha(space);
  alpha.set({up(), down(), orb(0, 0)}, r2);
  alpha.set({down(), up(), orb(0, 0)}, -r2);
  IrrepBlock even{0, +1, 0, {alpha}};

  StateVector beta(space);
  beta.set({up(), up(), orb(1, -1)}, r3);
  beta.set({up(), down(), orb(1, 0)}, -r6);
  beta.set({down(), up(), orb(1, 0)}, -r6);
  beta.set({down(), down(), orb(1, 1)}, r3);
  IrrepBlock odd{0, -1, 0, {beta}};

  return CatalogEntry{
      "two_spin",
      space,
      construct_glove_pair(even, odd, space),
      true,
      3,
      "Two spin-1/2 carriers plus one relative coordinate. The spin "
      "singlet in an S-wave pairs with the spin triplet coupled to the "
      "P-wave into a scalar; their sum and difference are exact hands."};
}

CatalogEntry spin_orbital_doublet_gloves() {
  const SpaceSpec space{{FactorSpec::spin_half(), FactorSpec::orbital(1)}, {}};
  const double r3 = 1.0 / std::sqrt(3.0);
  const double s23 = std::sqrt(2.0 / 3.0);

  StateVector ep(space), em(space);
  ep.set({up(), orb(0, 0)}, 1.0);
  em.set({down(), orb(0, 0)}, 1.0);
  IrrepBlock even{1, +1, 0, {ep, em}};

  // Odd J=1/2 doublet from spin x P-wave; the lower member carries the
  // sign demanded by ladder consistency.
  StateVector op(space), om(space);
  op.set({up(), orb(1, 0)}, r3);
  op.set({down(), orb(1, 1)}, -s23);
  om.set({up(), orb(1, -1)}, s23);
  om.set({down(), orb(1, 0)}, -r3);
  IrrepBlock odd{1, -1, 0, {op, om}};

  return CatalogEntry{
      "spin_orbital_doublet",
      space,
      construct_glove_pair(even, odd, space),
      true,
      2,
      "One spin-1/2 and one relative coordinate. The even S-wave doublet "
      "pairs with the odd J=1/2 doublet built from spin times P-wave; "
      "rank-2 projectors, the smallest perfect pair."};
}

CatalogEntry two_particle_approx_gloves() {
  const SpaceSpec space{{FactorSpec::orbital(1)}, {}};
  const double r2 = 1.0 / std::sqrt(2.0);

  StateVector plus(space), minus(space);
  plus.set({orb(0, 0)}, r2);
  plus.set({orb(1, 0)}, r2);
  minus.set({orb(0, 0)}, r2);
  minus.set({orb(1, 0)}, -r2);

  return CatalogEntry{
      "two_particle_approx",
      space,
      glove_pair_from_states(std::move(plus), std::move(minus)),
      false,
      2,
      "A single relative coordinate. The parity-exchanged pair is not "
      "rotation invariant: a rotation by pi about the y axis maps one "
      "hand exactly onto the other, so no measurement can tell them "
      "apart without a shared frame."};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back(four_particle_gloves());
    v.push_back(identical_particle_gloves(Statistics::Fermi));
    v.push_back(identical_particle_gloves(Statistics::Bose));
    v.push_back(three_particle_projector_gloves());
    v.push_back(two_spin_gloves());
    v.push_back(spin_orbital_doublet_gloves());
    v.push_back(two_particle_approx_gloves());
    return v;
  }();
  return entries;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return e;
  throw DomainError("unknown catalog entry: " + id);
}

namespace {

double basis_norm_defect(const GlovePair& pair) {
  double worst = 0.0;
  for (const auto* basis : {&pair.plus_basis, &pair.minus_basis})
    for (const StateVector& v : *basis)
      worst = std::max(worst, std::abs(norm(v) - 1.0));
  return worst;
}

double basis_overlap(const std::vector<StateVector>& a,
                     const std::vector<StateVector>& b, bool skip_diagonal) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (skip_diagonal && i == j) continue;
      worst = std::max(worst, std::abs(inner_product(a[i], b[j])));
    }
  return worst;
}

}  // namespace

std::vector<VerifyCheck> verify_entry(const CatalogEntry& entry,
                                      std::uint64_t seed,
                                      int rotation_samples, double tol) {
  std::vector<VerifyCheck> checks;
  auto add = [&checks](std::string name, double value, double threshold,
                       bool larger_is_better = false) {
    VerifyCheck c;
    c.name = std::move(name);
    c.value = value;
    c.threshold = threshold;
    c.larger_is_better = larger_is_better;
    c.pass = larger_is_better ? value >= threshold : value <= threshold;
    checks.push_back(std::move(c));
  };

  const GlovePair& pair = entry.pair;
  add("normalized", basis_norm_defect(pair), tol);
  add("orthogonal_within",
      std::max(basis_overlap(pair.plus_basis, pair.plus_basis, true),
               basis_overlap(pair.minus_basis, pair.minus_basis, true)),
      tol);
  add("orthogonal_across",
      basis_overlap(pair.minus_basis, pair.plus_basis, false), tol);

  {
    double worst = 0.0;
    for (std::size_t i = 0; i < pair.plus_basis.size(); ++i) {
      StateVector d = apply_parity(pair.plus_basis[i]);
      d -= pair.minus_basis[i];
      worst = std::max(worst, norm(d));
    }
    add("parity_swap", worst, tol);
  }

  const Generators gen = angular_momentum_generators(entry.space);
  if (pair.two_L >= 0) {
    const LinearOperator j2 = total_j_squared(entry.space);
    const double want_j2 = 0.25 * pair.two_L * (pair.two_L + 2);
    double worst_j2 = 0.0, worst_jz = 0.0, worst_ladder = 0.0;
    for (const auto* basis : {&pair.plus_basis, &pair.minus_basis}) {
      for (std::size_t i = 0; i < basis->size(); ++i) {
        const StateVector& v = (*basis)[i];
        const int two_m = pair.two_L - 2 * static_cast<int>(i);
        StateVector dj2 = apply(j2, v);
        dj2 -= StateVector(v) *= cplx{want_j2, 0.0};
        worst_j2 = std::max(worst_j2, norm(dj2));
        StateVector djz = apply(gen.jz, v);
        djz -= StateVector(v) *= cplx{0.5 * two_m, 0.0};
        worst_jz = std::max(worst_jz, norm(djz));
        if (i + 1 < basis->size()) {
          const double j = 0.5 * pair.two_L;
          const double m = 0.5 * two_m;
          const double c = std::sqrt(j * (j + 1) - m * (m - 1));
          StateVector dl = apply(gen.jminus, v);
          dl -= StateVector((*basis)[i + 1]) *= cplx{c, 0.0};
          worst_ladder = std::max(worst_ladder, norm(dl));
        }
      }
    }
    add("j_squared_labels", worst_j2, kOpTol);
    add("jz_labels", worst_jz, kOpTol);
    if (pair.two_L >= 1) add("ladder_phases", worst_ladder, kBlockTol);
  }

  if (entry.perfect) {
    HaarSampler sampler(seed);
    double worst = 0.0;
    const LinearOperator pp = pair.projector_plus();
    const LinearOperator pm = pair.projector_minus();
    for (int s = 0; s < rotation_samples; ++s) {
      const EulerAngles angles = sampler.next();
      if (pair.kind == GloveKind::StatePair) {
        for (const auto* basis : {&pair.plus_basis, &pair.minus_basis}) {
          StateVector d = apply_rotation(basis->front(), angles);
          d -= basis->front();
          worst = std::max(worst, norm(d));
        }
      } else {
        for (const LinearOperator* proj : {&pp, &pm}) {
          LinearOperator d = rotate_operator(*proj, angles);
          d -= *proj;
          worst = std::max(worst, frobenius_norm(d));
        }
      }
    }
    add("rotation_invariance", worst, kBlockTol);
  } else {
    const StateVector rotated = apply_rotation(
        pair.representative_plus(), EulerAngles{0.0, std::numbers::pi, 0.0});
    add("rotation_alignment",
        std::abs(inner_product(pair.representative_minus(), rotated)),
        1.0 - kBlockTol, true);
  }

  if (!entry.space.exchange_groups.empty()) {
    const std::vector<int>& group = entry.space.exchange_groups.front();
    const double r2 = 1.0 / std::sqrt(2.0);
    StateVector da = permutation_project(pair.representative_plus(), group,
                                         ExchangeSymmetry::Antisymmetric);
    da -= StateVector(aharonov_state(entry.space)) *= cplx{r2, 0.0};
    add("antisymmetric_component", norm(da), tol);
    StateVector ds = permutation_project(pair.representative_plus(), group,
                                         ExchangeSymmetry::Symmetric);
    ds -= StateVector(s_wave_triple(entry.space)) *= cplx{r2, 0.0};
    add("symmetric_component", norm(ds), tol);
  }

  return checks;
}

}  // namespace gloves
