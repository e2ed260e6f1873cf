#include "gloves/protocol.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "gloves/op.hpp"
#include "gloves/twirl.hpp"

namespace gloves {

namespace {

std::string format_angle(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

// Roundoff snapping for probabilities that are 0 or 1 by construction, so
// perfect gloves succeed in every trial rather than almost every trial.
double snap01(double p) {
  if (p < kCompareTol) return 0.0;
  if (p > 1.0 - kCompareTol) return 1.0;
  return p;
}

// The "+" effect of the optimal equal-prior discrimination of the rotation
// averaged hands: full weight on the positive eigenspace of
// twirl(rho+) - twirl(rho-), none on the negative one, and an even split of
// the kernel. Splitting the kernel keeps the decision unbiased when the
// averaged hands overlap (or, for the approximate pair, coincide).
LinearOperator helstrom_effect(const GlovePair& pair) {
  const DensityMatrix plus = haar_twirl_exact(hand_state(pair, +1));
  const DensityMatrix minus = haar_twirl_exact(hand_state(pair, -1));
  const Eigen::MatrixXcd delta = to_dense(plus.op()) - to_dense(minus.op());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(delta);
  Eigen::MatrixXcd effect =
      Eigen::MatrixXcd::Zero(delta.rows(), delta.cols());
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double eigenvalue = solver.eigenvalues()(i);
    const double weight =
        eigenvalue > kOpTol ? 1.0 : (eigenvalue < -kOpTol ? 0.0 : 0.5);
    effect += weight * solver.eigenvectors().col(i) *
              solver.eigenvectors().col(i).adjoint();
  }
  return operator_from_dense(pair.space, effect);
}

}  // namespace

std::string ChannelConfig::to_string() const {
  std::string text;
  if (random_rotation) {
    text = "random";
  } else if (fixed_rotation) {
    text = "fixed(" + format_angle(fixed_rotation->alpha) + ";" +
           format_angle(fixed_rotation->beta) + ";" +
           format_angle(fixed_rotation->gamma) + ")";
  } else {
    text = "none";
  }
  if (bob_opposite_chirality) text += "+opposite";
  return text;
}

OutcomeProbabilities glove_basis_probabilities(const GlovePair& pair,
                                               const StateVector& received) {
  OutcomeProbabilities out;
  StateVector residual = received;
  for (const StateVector& basis_state : pair.plus_basis) {
    const cplx amplitude = inner_product(basis_state, received);
    out.plus += std::norm(amplitude);
    residual -= amplitude * basis_state;
  }
  for (const StateVector& basis_state : pair.minus_basis) {
    const cplx amplitude = inner_product(basis_state, received);
    out.minus += std::norm(amplitude);
    residual -= amplitude * basis_state;
  }
  out.plus = clamp01(out.plus);
  out.minus = clamp01(out.minus);
  const double remainder = norm(residual);
  out.rest = clamp01(remainder * remainder);
  return out;
}

SimReport simulate_exchange(const CatalogEntry& entry,
                            const ChannelConfig& config, int trials,
                            std::uint64_t seed, MeasurementMode mode) {
  if (trials < 1) throw DomainError("simulate_exchange needs at least one trial");
  if (config.random_rotation && config.fixed_rotation) {
    throw DomainError(
        "channel cannot apply a random and a fixed rotation at once");
  }

  StateVector prepared = normalized(entry.pair.representative_plus());
  if (config.bob_opposite_chirality) prepared = apply_parity(prepared);

  LinearOperator helstrom_plus(entry.space);
  if (mode == MeasurementMode::Helstrom) {
    helstrom_plus = helstrom_effect(entry.pair);
  }

  SimReport report;
  report.entry_id = entry.id;
  report.config = config;
  report.trials = trials;
  report.seed = seed;

  for (int trial = 0; trial < trials; ++trial) {
    HaarSampler rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    StateVector received = prepared;
    if (config.random_rotation) {
      received = apply_rotation(received, rng.next());
    } else if (config.fixed_rotation) {
      received = apply_rotation(received, *config.fixed_rotation);
    }

    double p_plus = 0.0;
    double p_minus = 0.0;
    if (mode == MeasurementMode::Helstrom) {
      p_plus = snap01(clamp01(
          inner_product(received, apply(helstrom_plus, received)).real()));
      p_minus = 1.0 - p_plus;
    } else {
      const OutcomeProbabilities probs =
          glove_basis_probabilities(entry.pair, received);
      p_plus = snap01(probs.plus);
      p_minus = snap01(probs.minus);
    }

    const double u = rng.uniform();
    int outcome = 0;  // +1 plus, -1 minus, 0 rest
    if (u < p_plus) {
      outcome = +1;
    } else if (u < p_plus + p_minus) {
      outcome = -1;
    }
    const bool inferred_opposite = outcome == -1;
    if (outcome != 0 && inferred_opposite == config.bob_opposite_chirality) {
      ++report.successes;
    }
  }

  report.frequency = static_cast<double>(report.successes) / trials;
  report.standard_error =
      std::sqrt(report.frequency * (1.0 - report.frequency) / trials);
  return report;
}

double fixed_frame_information_check(const CatalogEntry& entry,
                                     const EulerAngles& angles) {
  const GlovePair& pair = entry.pair;
  if (pair.kind == GloveKind::ProjectorPair && pair.two_L <= 0) {
    throw DomainError(
        "frame information check needs a state pair or a projector pair "
        "with L > 0");
  }
  const StateVector reference = normalized(pair.representative_plus());
  const StateVector rotated = apply_rotation(reference, angles);
  return helstrom_success(DensityMatrix::pure(reference),
                          DensityMatrix::pure(rotated));
}

ResourceReport resource_report(const CatalogEntry& entry) {
  ResourceReport report;
  report.entry_id = entry.id;
  report.particle_count = entry.particle_count;
  for (const FactorSpec& factor : entry.space.factors) {
    report.factor_kinds.push_back(
        factor.kind == FactorKind::Orbital ? "orbital" : "spin");
  }
  // Orbital content actually used by the carriers, not the declared bound.
  for (const StateVector& basis_state : entry.pair.plus_basis) {
    const std::vector<int> footprint = lmax_footprint(basis_state);
    if (report.lmax.empty()) report.lmax.assign(footprint.size(), 0);
    for (std::size_t i = 0; i < footprint.size(); ++i) {
      report.lmax[i] = std::max(report.lmax[i], footprint[i]);
    }
  }
  const DensityMatrix twirled_plus =
      haar_twirl_exact(hand_state(entry.pair, +1));
  const DensityMatrix twirled_minus =
      haar_twirl_exact(hand_state(entry.pair, -1));
  report.qubits = communication_cost(twirled_plus, twirled_minus);
  report.perfect = entry.perfect;
  return report;
}

}  // namespace gloves
