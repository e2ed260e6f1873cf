#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gloves {

using cplx = std::complex<double>;

// Tolerance ladder, loosest to tightest use:
//   prune      amplitudes/entries below this are dropped from sparse containers
//   compare    scalar comparisons (inner products, coefficients)
//   op_ident   operator identities built from several products
//   block      iterated constructions (irrep bases, eigenvector checks)
inline constexpr double kPruneTol = 1e-14;
inline constexpr double kCompareTol = 1e-12;
inline constexpr double kOpTol = 1e-10;
inline constexpr double kBlockTol = 1e-9;

// Spaces beyond this total dimension are refused rather than silently ground through.
inline constexpr int kDimensionCap = 4096;

// Mismatched or malformed space structure (tensor factors, label shape).
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside a function's mathematical domain (invalid quantum numbers,
// non-states, zero couplings).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Request exceeds the supported dimension cap.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// splitmix64: used to derive independent seed streams from a master seed so
// that per-trial / per-sample / per-restart randomness does not depend on
// execution order.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace gloves
