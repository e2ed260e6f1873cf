#include <cmath>
#include "doctest.h"
#include <numbers>

#include "gloves/catalog.hpp"
#include "gloves/rotate.hpp"

using namespace gloves;

namespace {

bool all_pass(const std::vector<VerifyCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string failing(const std::vector<VerifyCheck>& checks) {
  std::string out;
  for (const auto& c : checks)
    if (!c.pass)
      out += c.name + " value=" + std::to_string(c.value) + " threshold=" +
             std::to_string(c.threshold) + "; ";
  return out;
}

}  // namespace

TEST_CASE("catalog lists the seven entries in fixed order") {
  const auto& entries = catalog();
  REQUIRE(entries.size() == 7);

  const char* ids[] = {"four_particle",  "identical_fermi",
                       "identical_bose", "three_particle_projector",
                       "two_spin",       "spin_orbital_doublet",
                       "two_particle_approx"};
  const int particles[] = {4, 4, 4, 3, 3, 2, 2};
  const bool perfect[] = {true, true, true, true, true, true, false};
  const int ranks[] = {1, 1, 1, 3, 1, 2, 1};

  for (std::size_t i = 0; i < entries.size(); ++i) {
    CAPTURE(ids[i]);
    CHECK(entries[i].id == ids[i]);
    CHECK(entries[i].particle_count == particles[i]);
    CHECK(entries[i].perfect == perfect[i]);
    CHECK(entries[i].pair.rank() == ranks[i]);
    CHECK_FALSE(entries[i].notes.empty());
  }

  CHECK(find_entry("two_spin").particle_count == 3);
  CHECK_THROWS_AS(find_entry("no_such_entry"), DomainError);
}

TEST_CASE("every catalog entry passes its invariant suite") {
  for (const CatalogEntry& entry : catalog()) {
    CAPTURE(entry.id);
    const auto checks = verify_entry(entry, 12345, 40);
    CAPTURE(failing(checks));
    CHECK(all_pass(checks));
    CHECK(checks.size() >= 4);
  }
}

TEST_CASE("four-particle hands mix the scalar triple with the odd scalar") {
  const CatalogEntry entry = four_particle_gloves();
  const StateVector& plus = entry.pair.representative_plus();
  const StateVector& minus = entry.pair.representative_minus();

  const double r2 = 1.0 / std::sqrt(2.0);
  const double r12 = 1.0 / std::sqrt(12.0);

  // all-S-wave component
  const BasisLabel zeros{{0, 0}, {0, 0}, {0, 0}};
  CHECK(std::abs(plus.amplitude(zeros) - cplx{r2, 0.0}) < kCompareTol);
  CHECK(std::abs(minus.amplitude(zeros) - cplx{r2, 0.0}) < kCompareTol);

  // one even and one odd permutation of the P-wave scalar
  const BasisLabel even_perm{{2, 2}, {2, 0}, {2, -2}};
  const BasisLabel odd_perm{{2, 2}, {2, -2}, {2, 0}};
  CHECK(std::abs(plus.amplitude(even_perm) - cplx{r12, 0.0}) < kCompareTol);
  CHECK(std::abs(plus.amplitude(odd_perm) + cplx{r12, 0.0}) < kCompareTol);
  CHECK(std::abs(minus.amplitude(even_perm) + cplx{r12, 0.0}) < kCompareTol);

  // the two hands are the sum and difference of the same components
  StateVector sum = plus + minus;
  sum *= cplx{r2, 0.0};
  StateVector ds = sum - s_wave_triple(entry.space);
  CHECK(norm(ds) < kCompareTol);

  StateVector diff = plus - minus;
  diff *= cplx{r2, 0.0};
  StateVector da = diff - aharonov_state(entry.space);
  CHECK(norm(da) < kCompareTol);
}

TEST_CASE("identical-particle entries carry the exchange group") {
  for (const char* id : {"identical_fermi", "identical_bose"}) {
    const CatalogEntry& entry = find_entry(id);
    REQUIRE(entry.space.exchange_groups.size() == 1);
    CHECK(entry.space.exchange_groups.front() == std::vector<int>{0, 1, 2});
    CHECK(entry.pair.kind == GloveKind::StatePair);

    // angular content equals the four-particle pair
    const CatalogEntry four = four_particle_gloves();
    const auto& a = entry.pair.representative_plus().terms();
    const auto& b = four.pair.representative_plus().terms();
    REQUIRE(a.size() == b.size());
    auto ia = a.begin();
    for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib) {
      CHECK(ia->first == ib->first);
      CHECK(std::abs(ia->second - ib->second) < kCompareTol);
    }
  }
}

TEST_CASE("two-spin hands pair the spin singlet with the triplet scalar") {
  const CatalogEntry entry = two_spin_gloves();
  CHECK(entry.pair.kind == GloveKind::StatePair);
  CHECK(entry.space.dimension() == 16);

  const StateVector& plus = entry.pair.representative_plus();
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);

  // singlet x S-wave enters with weight 1/sqrt2
  CHECK(std::abs(plus.amplitude({{1, 1}, {1, -1}, {0, 0}}) -
                 cplx{0.5, 0.0}) < kCompareTol);
  CHECK(std::abs(plus.amplitude({{1, -1}, {1, 1}, {0, 0}}) +
                 cplx{0.5, 0.0}) < kCompareTol);

  // aligned spins x opposite P-wave enters with weight 1/sqrt2 * 1/sqrt3
  CHECK(std::abs(plus.amplitude({{1, 1}, {1, 1}, {2, -2}}) -
                 cplx{r2 * r3, 0.0}) < kCompareTol);
  CHECK(std::abs(plus.amplitude({{1, -1}, {1, -1}, {2, 2}}) -
                 cplx{r2 * r3, 0.0}) < kCompareTol);
}

TEST_CASE("doublet entry exposes rank-2 projectors on an 8-dim space") {
  const CatalogEntry entry = spin_orbital_doublet_gloves();
  CHECK(entry.space.dimension() == 8);
  CHECK(entry.pair.kind == GloveKind::ProjectorPair);
  CHECK(entry.pair.two_L == 1);
  CHECK(entry.pair.rank() == 2);

  // the two projectors resolve the full odd+even J=1/2 sector: their sum
  // commutes with parity and has trace 4
  const LinearOperator sum =
      entry.pair.projector_plus() + entry.pair.projector_minus();
  CHECK(std::abs(trace(sum) - cplx{4.0, 0.0}) < kOpTol);
  CHECK(frobenius_norm(parity_conjugate(sum) - sum) < kOpTol);
}

TEST_CASE("approximate pair is aligned by a half-turn, not invariant") {
  const CatalogEntry entry = two_particle_approx_gloves();
  REQUIRE_FALSE(entry.perfect);

  const StateVector& plus = entry.pair.representative_plus();
  const StateVector& minus = entry.pair.representative_minus();

  // a rotation by pi about y maps plus exactly onto minus
  const StateVector rotated =
      apply_rotation(plus, EulerAngles{0.0, std::numbers::pi, 0.0});
  CHECK(std::abs(std::abs(inner_product(minus, rotated)) - 1.0) < kBlockTol);

  // generic rotations move the state: not a glove in the strict sense
  HaarSampler sampler(3);
  double worst = 0.0;
  for (int s = 0; s < 20; ++s) {
    StateVector moved = apply_rotation(plus, sampler.next());
    moved -= plus;
    worst = std::max(worst, norm(moved));
  }
  CHECK(worst > 0.1);
}
