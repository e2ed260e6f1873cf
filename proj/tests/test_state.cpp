#include "gloves/state.hpp"

#include <random>

#include "doctest.h"
#include "gloves/op.hpp"

using namespace gloves;

namespace {

StateVector random_state(const SpaceSpec& space, std::mt19937_64& rng,
                         bool normalize = true) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector out{space};
  for (const auto& label : enumerate_basis(space))
    out.set(label, cplx{gauss(rng), gauss(rng)});
  return normalize ? normalized(out) : out;
}

}  // namespace

TEST_CASE("accumulate prunes below tolerance") {
  SpaceSpec space{{FactorSpec::orbital(1)}};
  StateVector s{space};
  s.accumulate({{2, 0}}, cplx{1.0, 0.0});
  s.accumulate({{2, 0}}, cplx{-1.0, 0.0});
  CHECK(s.empty());
  s.set({{2, 0}}, cplx{1e-15, 0.0});
  CHECK(s.empty());
  s.set({{2, 0}}, cplx{0.5, 0.5});
  CHECK(s.terms().size() == 1);
  CHECK_THROWS_AS(s.set({{4, 0}}, cplx{1.0, 0.0}), DimensionError);
}

TEST_CASE("inner product matches dense oracle") {
  SpaceSpec space{{FactorSpec::orbital(2), FactorSpec::spin_half()}};
  std::mt19937_64 rng(11u);
  for (int rep = 0; rep < 20; ++rep) {
    StateVector a = random_state(space, rng, false);
    StateVector b = random_state(space, rng, false);
    const cplx sparse = inner_product(a, b);
    const cplx dense = to_dense(a).dot(to_dense(b));
    CHECK(std::abs(sparse - dense) <= 1e-12);
  }
  SpaceSpec other{{FactorSpec::orbital(1)}};
  StateVector c{other};
  CHECK_THROWS_AS(inner_product(random_state(space, rng), c), DimensionError);
}

TEST_CASE("norm and normalized") {
  SpaceSpec space{{FactorSpec::orbital(1)}};
  StateVector s{space};
  s.set({{0, 0}}, cplx{3.0, 0.0});
  s.set({{2, 2}}, cplx{0.0, 4.0});
  CHECK(norm(s) == doctest::Approx(5.0));
  CHECK(norm(normalized(s)) == doctest::Approx(1.0));
  StateVector zero{space};
  CHECK_THROWS_AS(normalized(zero), DomainError);
}

TEST_CASE("phase fixing makes the leading amplitude real positive") {
  SpaceSpec space{{FactorSpec::orbital(1)}};
  StateVector s{space};
  s.set({{2, 2}}, cplx{0.0, -0.6});
  s.set({{2, -2}}, cplx{0.8, 0.0});
  StateVector fixed = phase_fixed(s);
  const cplx lead = fixed.terms().begin()->second;
  CHECK(lead.real() == doctest::Approx(0.6));
  CHECK(std::abs(lead.imag()) <= 1e-15);
  // modulus pattern is untouched
  CHECK(std::abs(fixed.amplitude({{2, -2}})) == doctest::Approx(0.8));
  CHECK(norm(fixed - phase_fixed(fixed)) <= 1e-14);
}

TEST_CASE("tensor product matches dense kron") {
  SpaceSpec left{{FactorSpec::orbital(1)}};
  SpaceSpec right{{FactorSpec::spin_half()}};
  std::mt19937_64 rng(17u);
  StateVector a = random_state(left, rng, false);
  StateVector b = random_state(right, rng, false);
  StateVector ab = tensor(a, b);
  REQUIRE(ab.space().factors.size() == 2);
  const Eigen::VectorXcd da = to_dense(a);
  const Eigen::VectorXcd db = to_dense(b);
  const Eigen::VectorXcd dab = to_dense(ab);
  for (int i = 0; i < da.size(); ++i)
    for (int k = 0; k < db.size(); ++k)
      CHECK(std::abs(dab(i * db.size() + k) - da(i) * db(k)) <= 1e-14);
}

TEST_CASE("tensor shifts exchange groups") {
  SpaceSpec left{{FactorSpec::orbital(1), FactorSpec::orbital(1)}, {{0, 1}}};
  SpaceSpec right{{FactorSpec::orbital(1), FactorSpec::orbital(1)}, {{0, 1}}};
  StateVector a = basis_state(left, {{0, 0}, {0, 0}});
  StateVector b = basis_state(right, {{2, 0}, {2, 0}});
  StateVector ab = tensor(a, b);
  REQUIRE(ab.space().exchange_groups.size() == 2);
  CHECK(ab.space().exchange_groups[1] == std::vector<int>{2, 3});
}

TEST_CASE("parity flips odd-l amplitudes and squares to identity") {
  SpaceSpec space{{FactorSpec::orbital(2), FactorSpec::spin_half()}};
  std::mt19937_64 rng(23u);
  StateVector s = random_state(space, rng);
  StateVector ps = apply_parity(s);
  CHECK(norm(apply_parity(ps) - s) <= 1e-14);
  CHECK(std::abs(ps.amplitude({{2, 0}, {1, 1}}) +
                 s.amplitude({{2, 0}, {1, 1}})) <= 1e-14);
  CHECK(std::abs(ps.amplitude({{4, 2}, {1, -1}}) -
                 s.amplitude({{4, 2}, {1, -1}})) <= 1e-14);
  CHECK(norm(ps) == doctest::Approx(norm(s)));
}

TEST_CASE("lmax footprint") {
  SpaceSpec space{{FactorSpec::orbital(2), FactorSpec::spin_half(),
                   FactorSpec::orbital(1)}};
  StateVector s{space};
  s.set({{4, 0}, {1, 1}, {0, 0}}, cplx{0.5, 0.0});
  s.set({{2, 2}, {1, -1}, {2, -2}}, cplx{0.5, 0.0});
  CHECK(lmax_footprint(s) == std::vector<int>{2, 1});
  StateVector zero{space};
  CHECK(lmax_footprint(zero) == std::vector<int>{0, 0});
  // footprint respects its amplitude threshold
  StateVector tiny{space};
  tiny.set({{4, 0}, {1, 1}, {2, 0}}, cplx{1e-9, 0.0});
  tiny.set({{0, 0}, {1, 1}, {0, 0}}, cplx{1.0, 0.0});
  CHECK(lmax_footprint(tiny, 1e-6) == std::vector<int>{0, 0});
  CHECK(lmax_footprint(tiny) == std::vector<int>{2, 1});
}
