#include "gloves/search.hpp"

#include <cmath>

#include "doctest.h"
#include "gloves/catalog.hpp"
#include "gloves/rotate.hpp"
#include "gloves/twirl.hpp"

using namespace gloves;

namespace {

SpaceSpec orbitals(std::initializer_list<int> l_maxes) {
  std::vector<FactorSpec> factors;
  for (int l : l_maxes) factors.push_back(FactorSpec::orbital(l));
  return SpaceSpec{factors, {}};
}

StateVector random_state(const SpaceSpec& space, std::uint64_t seed) {
  HaarSampler rng(seed);
  StateVector psi{space};
  for (const BasisLabel& label : enumerate_basis(space))
    psi.set(label, cplx{2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0});
  return normalized(psi);
}

}  // namespace

TEST_CASE("block-coordinate score equals the twirl-and-measure score") {
  for (const SpaceSpec& space :
       {orbitals({1}), orbitals({1, 1}),
        SpaceSpec{{FactorSpec::spin_half(), FactorSpec::orbital(1)}, {}}}) {
    CAPTURE(space.to_string());
    const Decomposition dec = decompose(space);
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
      const StateVector psi = random_state(space, seed);
      const double fast = twirled_pair_score(dec, psi);

      const DensityMatrix plus = haar_twirl_exact(DensityMatrix::pure(psi));
      const DensityMatrix minus =
          haar_twirl_exact(DensityMatrix::pure(apply_parity(psi)));
      const double slow = helstrom_success(plus, minus);
      CHECK(std::abs(fast - slow) < 1e-10);
    }
  }
}

TEST_CASE("search certifies the perfect side of the dichotomy") {
  const SearchResult result = optimize_approx_gloves(orbitals({1, 1, 1}));
  CHECK(result.upper_bound == 1.0);
  CHECK(result.score >= 1.0 - 1e-6);
  CHECK(result.attained_bound);
  CHECK(std::abs(norm(result.best_state) - 1.0) < kCompareTol);

  // the winning state really is a glove: its parity image is orthogonal and
  // the twirled pair stays perfectly distinguishable
  const StateVector mirror = apply_parity(result.best_state);
  CHECK(std::abs(inner_product(result.best_state, mirror)) < 2e-3);
}

TEST_CASE("search certifies the impossible side of the dichotomy") {
  for (int l_max : {1, 2, 5}) {
    CAPTURE(l_max);
    const SearchResult result = optimize_approx_gloves(orbitals({l_max}));
    CHECK(result.upper_bound == 0.5);
    CHECK(result.score <= 0.5 + 1e-6);
    CHECK(result.score >= 0.5 - 1e-12);
    CHECK(result.attained_bound);  // the ceiling itself is reached exactly
  }
}

TEST_CASE("search flags spaces where only subspace pairs exist") {
  // two P-wave factors: L=1 carries both parities, so a perfect pair exists
  // and a single optimal state reaches the ceiling
  const SearchResult result = optimize_approx_gloves(orbitals({1, 1}));
  CHECK(result.upper_bound == 1.0);
  CHECK(result.score >= 1.0 - 1e-6);
}

TEST_CASE("search works on half-integer sectors") {
  const SpaceSpec space{{FactorSpec::spin_half(), FactorSpec::orbital(1)}, {}};
  const SearchResult result = optimize_approx_gloves(space);
  CHECK(result.upper_bound == 1.0);
  CHECK(result.score >= 1.0 - 1e-6);
}

TEST_CASE("search is deterministic under its seed") {
  SearchOptions options;
  options.restarts = 2;
  options.max_iters = 300;
  options.seed = 7;
  const SearchResult a = optimize_approx_gloves(orbitals({1, 1}), options);
  const SearchResult b = optimize_approx_gloves(orbitals({1, 1}), options);
  CHECK(a.score == b.score);
  CHECK(a.iterations == b.iterations);
  REQUIRE(a.best_state.terms().size() == b.best_state.terms().size());
  auto ia = a.best_state.terms().begin();
  for (auto ib = b.best_state.terms().begin();
       ib != b.best_state.terms().end(); ++ia, ++ib) {
    CHECK(ia->first == ib->first);
    CHECK(ia->second == ib->second);
  }
}

TEST_CASE("search rejects degenerate options") {
  SearchOptions options;
  options.restarts = 0;
  CHECK_THROWS_AS(optimize_approx_gloves(orbitals({1}), options), DomainError);
  options.restarts = 1;
  options.max_iters = 0;
  CHECK_THROWS_AS(optimize_approx_gloves(orbitals({1}), options), DomainError);
}

TEST_CASE("catalog glove states score at the ceiling") {
  // the four-particle hand is itself an optimal input
  const CatalogEntry entry = find_entry("four_particle");
  const Decomposition dec = decompose(entry.space);
  const double score =
      twirled_pair_score(dec, entry.pair.representative_plus());
  CHECK(score == doctest::Approx(1.0).epsilon(1e-9));

  // a bare basis state of definite parity scores exactly 1/2
  const StateVector plain = basis_state(entry.space, {{0, 0}, {0, 0}, {0, 0}});
  CHECK(twirled_pair_score(dec, plain) == doctest::Approx(0.5).epsilon(1e-12));
}
