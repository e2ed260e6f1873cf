#include "gloves/permute.hpp"

#include <random>

#include "doctest.h"
#include "gloves/op.hpp"

using namespace gloves;

namespace {

StateVector random_state(const SpaceSpec& space, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  StateVector out{space};
  for (const auto& label : enumerate_basis(space))
    out.set(label, cplx{gauss(rng), gauss(rng)});
  return normalized(out);
}

}  // namespace

TEST_CASE("two-factor swap projectors") {
  SpaceSpec space{{FactorSpec::orbital(1), FactorSpec::orbital(1)}};
  StateVector s{space};
  s.set({{2, 2}, {2, 0}}, cplx{1.0, 0.0});
  StateVector sym = permutation_project(s, {0, 1}, ExchangeSymmetry::Symmetric);
  StateVector anti =
      permutation_project(s, {0, 1}, ExchangeSymmetry::Antisymmetric);
  CHECK(std::abs(sym.amplitude({{2, 2}, {2, 0}}) - cplx{0.5, 0.0}) <= 1e-15);
  CHECK(std::abs(sym.amplitude({{2, 0}, {2, 2}}) - cplx{0.5, 0.0}) <= 1e-15);
  CHECK(std::abs(anti.amplitude({{2, 2}, {2, 0}}) - cplx{0.5, 0.0}) <= 1e-15);
  CHECK(std::abs(anti.amplitude({{2, 0}, {2, 2}}) + cplx{0.5, 0.0}) <= 1e-15);
  CHECK(norm((sym + anti) - s) <= 1e-14);
  CHECK(std::abs(inner_product(sym, anti)) <= 1e-14);
}

TEST_CASE("projectors are idempotent and orthogonal on three factors") {
  SpaceSpec space{{FactorSpec::orbital(1), FactorSpec::orbital(1),
                   FactorSpec::orbital(1)}};
  std::mt19937_64 rng(3u);
  const std::vector<int> group{0, 1, 2};
  for (int rep = 0; rep < 10; ++rep) {
    StateVector s = random_state(space, rng);
    StateVector sym = permutation_project(s, group, ExchangeSymmetry::Symmetric);
    StateVector anti =
        permutation_project(s, group, ExchangeSymmetry::Antisymmetric);
    CHECK(norm(permutation_project(sym, group, ExchangeSymmetry::Symmetric) -
               sym) <= 1e-12);
    CHECK(norm(permutation_project(anti, group,
                                   ExchangeSymmetry::Antisymmetric) -
               anti) <= 1e-12);
    CHECK(norm(permutation_project(anti, group, ExchangeSymmetry::Symmetric)) <=
          1e-12);
    CHECK(norm(permutation_project(sym, group,
                                   ExchangeSymmetry::Antisymmetric)) <= 1e-12);
  }
}

TEST_CASE("projection matches the dense permutation-matrix oracle") {
  SpaceSpec space{{FactorSpec::orbital(1), FactorSpec::orbital(1),
                   FactorSpec::orbital(1)}};
  auto basis = enumerate_basis(space);
  auto index = basis_index(space);
  const int dim = space.dimension();

  // dense antisymmetrizer: (1/6) sum_pi sgn(pi) P_pi
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const int signs[6] = {1, -1, -1, 1, 1, -1};
  Eigen::MatrixXcd anti_dense = Eigen::MatrixXcd::Zero(dim, dim);
  for (int p = 0; p < 6; ++p) {
    for (int col = 0; col < dim; ++col) {
      BasisLabel moved(3);
      for (int i = 0; i < 3; ++i) moved[perms[p][i]] = basis[col][i];
      anti_dense(index.at(moved), col) += signs[p] / 6.0;
    }
  }

  std::mt19937_64 rng(19u);
  for (int rep = 0; rep < 5; ++rep) {
    StateVector s = random_state(space, rng);
    const Eigen::VectorXcd direct = to_dense(
        permutation_project(s, {0, 1, 2}, ExchangeSymmetry::Antisymmetric));
    const Eigen::VectorXcd oracle = anti_dense * to_dense(s);
    CHECK((direct - oracle).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("projection on a subgroup leaves other factors alone") {
  SpaceSpec space{{FactorSpec::orbital(1), FactorSpec::orbital(1),
                   FactorSpec::spin_half()}};
  StateVector s{space};
  s.set({{2, 2}, {2, 0}, {1, 1}}, cplx{1.0, 0.0});
  StateVector anti =
      permutation_project(s, {0, 1}, ExchangeSymmetry::Antisymmetric);
  CHECK(std::abs(anti.amplitude({{2, 0}, {2, 2}, {1, 1}}) + cplx{0.5, 0.0}) <=
        1e-15);
  CHECK(anti.amplitude({{2, 0}, {2, 2}, {1, -1}}) == cplx{0.0, 0.0});
}

TEST_CASE("group validation") {
  SpaceSpec space{{FactorSpec::orbital(1), FactorSpec::orbital(2)}};
  StateVector s = basis_state(space, {{0, 0}, {0, 0}});
  CHECK_THROWS_AS(permutation_project(s, {0, 1}, ExchangeSymmetry::Symmetric),
                  DimensionError);
  CHECK_THROWS_AS(permutation_project(s, {0}, ExchangeSymmetry::Symmetric),
                  DimensionError);
  CHECK_THROWS_AS(permutation_project(s, {0, 5}, ExchangeSymmetry::Symmetric),
                  DimensionError);
}
