#pragma once

#include <cstdint>

#include "gloves/op.hpp"
#include "gloves/state.hpp"

namespace gloves {

// Active z-y-z Euler angles. Stored as given; canonical() folds into
// alpha, gamma in [0, 4pi) and beta in [0, pi] for reporting. The group
// action itself is periodic (up to the spinor sign on half-integer factors),
// so canonicalization never changes what a rotation does to an even-spin
// state.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  EulerAngles() = default;
  EulerAngles(double a, double b, double g);

  EulerAngles canonical() const;
};

// Haar-distributed rotation: alpha, gamma uniform on [0, 2pi),
// cos(beta) uniform on [-1, 1]. The stream is a splitmix64 chain mapped to
// 53-bit uniform doubles, so equal seeds give equal angle sequences on
// every platform.
class HaarSampler {
 public:
  explicit HaarSampler(std::uint64_t seed);
  EulerAngles next();
  double uniform();  // one canonical double in [0, 1)

 private:
  std::uint64_t state_;
};

// U(R)|state>, each factor rotated by its D^j(alpha, beta, gamma).
StateVector apply_rotation(const StateVector& state, const EulerAngles& angles);

// U(R) op U(R)^dagger
LinearOperator rotate_operator(const LinearOperator& op,
                               const EulerAngles& angles);

// Dense U(R) on the product basis (kron of per-factor D blocks).
Eigen::MatrixXcd rotation_matrix(const SpaceSpec& space,
                                 const EulerAngles& angles);

}  // namespace gloves
