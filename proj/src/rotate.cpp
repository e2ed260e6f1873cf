#include "gloves/rotate.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gloves/angular.hpp"

namespace gloves {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double fold(double angle, double period) {
  double folded = std::fmod(angle, period);
  if (folded < 0.0) folded += period;
  return folded;
}

// Per-factor rotation columns: for each (two_j, two_m) key, the nonzero
// D^j_{m', m} amplitudes in m' = j..-j order.
struct FactorRotation {
  int two_j;
  std::vector<cplx> column;  // indexed by (two_j - two_m_row) / 2
};

FactorRotation factor_column(int two_j, int two_m, const EulerAngles& angles) {
  FactorRotation out{two_j, {}};
  out.column.reserve(two_j + 1);
  for (int two_mr = two_j; two_mr >= -two_j; two_mr -= 2)
    out.column.push_back(
        wigner_D(two_j, two_mr, two_m, angles.alpha, angles.beta, angles.gamma));
  return out;
}

}  // namespace

EulerAngles::EulerAngles(double a, double b, double g)
    : alpha(a), beta(b), gamma(g) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(g))
    throw DomainError("euler angles must be finite");
}

EulerAngles EulerAngles::canonical() const {
  double a = fold(alpha, 2.0 * kTwoPi);
  double b = fold(beta, 2.0 * kTwoPi);
  double g = fold(gamma, 2.0 * kTwoPi);
  // beta into [0, pi]: d^j(beta + 2pi) = (-1)^{2j} d^j(beta) and
  // d^j(2pi - beta) row/col flips absorb into alpha, gamma shifts by pi.
  if (b > kTwoPi) {
    b -= kTwoPi;
    a = fold(a + kTwoPi, 2.0 * kTwoPi);
    g = fold(g + kTwoPi, 2.0 * kTwoPi);
  }
  if (b > std::numbers::pi) {
    b = kTwoPi - b;
    a = fold(a + std::numbers::pi, 2.0 * kTwoPi);
    g = fold(g + std::numbers::pi, 2.0 * kTwoPi);
  }
  return EulerAngles{a, b, g};
}

HaarSampler::HaarSampler(std::uint64_t seed) : state_(splitmix64(seed)) {}

double HaarSampler::uniform() {
  state_ = splitmix64(state_);
  return static_cast<double>(state_ >> 11) * 0x1.0p-53;
}

EulerAngles HaarSampler::next() {
  const double alpha = kTwoPi * uniform();
  const double cos_beta = 1.0 - 2.0 * uniform();
  const double gamma = kTwoPi * uniform();
  return EulerAngles{alpha, std::acos(cos_beta), gamma};
}

StateVector apply_rotation(const StateVector& state,
                           const EulerAngles& angles) {
  StateVector out{state.space()};
  const std::size_t n = state.space().factors.size();
  std::vector<FactorRotation> cols(n);
  BasisLabel rotated(n);
  for (const auto& [label, amp] : state.terms()) {
    for (std::size_t f = 0; f < n; ++f)
      cols[f] = factor_column(label[f].two_j, label[f].two_m, angles);
    // odometer over the rotated m' of each factor
    std::vector<int> pos(n, 0);
    while (true) {
      cplx coeff = amp;
      for (std::size_t f = 0; f < n; ++f) {
        coeff *= cols[f].column[pos[f]];
        rotated[f] = {cols[f].two_j, cols[f].two_j - 2 * pos[f]};
      }
      if (std::abs(coeff) > kPruneTol) out.accumulate(rotated, coeff);
      std::size_t k = n;
      bool done = true;
      while (k > 0) {
        --k;
        if (++pos[k] <= cols[k].two_j) {
          done = false;
          break;
        }
        pos[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

LinearOperator rotate_operator(const LinearOperator& op,
                               const EulerAngles& angles) {
  // U op U^dagger via rotating ket and bra labels of every entry
  LinearOperator out{op.space()};
  const std::size_t n = op.space().factors.size();
  std::vector<FactorRotation> row_cols(n), col_cols(n);
  BasisLabel r(n), c(n);
  for (const auto& [key, value] : op.entries()) {
    for (std::size_t f = 0; f < n; ++f) {
      row_cols[f] = factor_column(key.first[f].two_j, key.first[f].two_m, angles);
      col_cols[f] =
          factor_column(key.second[f].two_j, key.second[f].two_m, angles);
    }
    std::vector<int> rp(n, 0);
    while (true) {
      cplx rcoeff = value;
      for (std::size_t f = 0; f < n; ++f) {
        rcoeff *= row_cols[f].column[rp[f]];
        r[f] = {row_cols[f].two_j, row_cols[f].two_j - 2 * rp[f]};
      }
      if (std::abs(rcoeff) > kPruneTol) {
        std::vector<int> cp(n, 0);
        while (true) {
          cplx coeff = rcoeff;
          for (std::size_t f = 0; f < n; ++f) {
            coeff *= std::conj(col_cols[f].column[cp[f]]);
            c[f] = {col_cols[f].two_j, col_cols[f].two_j - 2 * cp[f]};
          }
          if (std::abs(coeff) > kPruneTol) out.accumulate(r, c, coeff);
          std::size_t k = n;
          bool done = true;
          while (k > 0) {
            --k;
            if (++cp[k] <= col_cols[k].two_j) {
              done = false;
              break;
            }
            cp[k] = 0;
          }
          if (done) break;
        }
      }
      std::size_t k = n;
      bool done = true;
      while (k > 0) {
        --k;
        if (++rp[k] <= row_cols[k].two_j) {
          done = false;
          break;
        }
        rp[k] = 0;
      }
      if (done) break;
    }
  }
  return out;
}

Eigen::MatrixXcd rotation_matrix(const SpaceSpec& space,
                                 const EulerAngles& angles) {
  auto basis = enumerate_basis(space);
  auto index = basis_index(space);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  BasisLabel rotated(space.factors.size());
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto& label = basis[col];
    const std::size_t n = label.size();
    std::vector<FactorRotation> cols(n);
    for (std::size_t f = 0; f < n; ++f)
      cols[f] = factor_column(label[f].two_j, label[f].two_m, angles);
    std::vector<int> pos(n, 0);
    while (true) {
      cplx coeff{1.0, 0.0};
      for (std::size_t f = 0; f < n; ++f) {
        coeff *= cols[f].column[pos[f]];
        rotated[f] = {cols[f].two_j, cols[f].two_j - 2 * pos[f]};
      }
      mat(index.at(rotated), col) += coeff;
      std::size_t k = n;
      bool done = true;
      while (k > 0) {
        --k;
        if (++pos[k] <= cols[k].two_j) {
          done = false;
          break;
        }
        pos[k] = 0;
      }
      if (done) break;
    }
  }
  return mat;
}

}  // namespace gloves
