#include "gloves/twirl.hpp"

#include <cmath>

#include "gloves/rotate.hpp"

namespace gloves {

LinearOperator haar_twirl_exact_op(const LinearOperator& op) {
  const Decomposition dec = decompose(op.space());
  LinearOperator out{op.space()};
  for (const auto& a : dec.blocks) {
    for (const auto& b : dec.blocks) {
      if (a.two_L != b.two_L) continue;
      cplx avg{0.0, 0.0};
      for (int m = 0; m < a.dim(); ++m)
        avg += inner_product(a.basis[m], apply(op, b.basis[m]));
      avg /= static_cast<double>(a.dim());
      if (std::abs(avg) <= kPruneTol) continue;
      for (int m = 0; m < a.dim(); ++m)
        out += avg * outer_product(a.basis[m], b.basis[m]);
    }
  }
  return out;
}

DensityMatrix haar_twirl_exact(const DensityMatrix& rho) {
  return DensityMatrix::from_operator(haar_twirl_exact_op(rho.op()));
}

LinearOperator haar_twirl_monte_carlo(const LinearOperator& op, int samples,
                                      std::uint64_t seed) {
  if (samples <= 0)
    throw DomainError("monte carlo twirl needs a positive sample count");
  LinearOperator sum{op.space()};
  for (int i = 0; i < samples; ++i) {
    HaarSampler sampler(derive_seed(seed, static_cast<std::uint64_t>(i)));
    sum += rotate_operator(op, sampler.next());
  }
  sum *= cplx{1.0 / samples, 0.0};
  return sum;
}

DensityMatrix hand_state(const GlovePair& pair, int sign) {
  if (sign != 1 && sign != -1)
    throw DomainError("hand sign must be +1 or -1");
  if (pair.kind == GloveKind::StatePair)
    return DensityMatrix::pure(sign == 1 ? pair.representative_plus()
                                         : pair.representative_minus());
  LinearOperator proj =
      sign == 1 ? pair.projector_plus() : pair.projector_minus();
  proj *= cplx{1.0 / pair.rank(), 0.0};
  return DensityMatrix::from_operator(std::move(proj));
}

double communication_cost(const DensityMatrix& twirled_plus,
                          const DensityMatrix& twirled_minus) {
  LinearOperator mix = twirled_plus.op() + twirled_minus.op();
  mix *= cplx{0.5, 0.0};
  return von_neumann_entropy(DensityMatrix::from_operator(std::move(mix)));
}

TwirlReport twirl_report(const CatalogEntry& entry, int monte_carlo_samples,
                         std::uint64_t seed) {
  const DensityMatrix plus = hand_state(entry.pair, +1);
  const DensityMatrix minus = hand_state(entry.pair, -1);
  const DensityMatrix tplus = haar_twirl_exact(plus);
  const DensityMatrix tminus = haar_twirl_exact(minus);

  TwirlReport report;
  report.entry_id = entry.id;
  report.trace_distance_before = trace_distance(plus, minus);
  report.trace_distance_after = trace_distance(tplus, tminus);
  report.helstrom_after = helstrom_success(tplus, tminus);
  report.communication_qubits = communication_cost(tplus, tminus);
  report.monte_carlo_samples = monte_carlo_samples;
  if (monte_carlo_samples > 0) {
    double worst = 0.0;
    int stream = 0;
    for (const DensityMatrix* rho : {&plus, &minus}) {
      LinearOperator diff =
          haar_twirl_monte_carlo(rho->op(), monte_carlo_samples,
                                 derive_seed(seed, 1000 + stream++));
      diff -= haar_twirl_exact_op(rho->op());
      worst = std::max(worst, max_abs_entry(diff));
    }
    report.monte_carlo_max_error = worst;
  }
  return report;
}

ApproxTwirlComparison approx_pair_twirl_comparison() {
  const CatalogEntry entry = two_particle_approx_gloves();
  const SpaceSpec& space = entry.space;
  const BasisLabel s_wave{{0, 0}};
  const BasisLabel p_wave{{2, 0}};
  const StateVector s = basis_state(space, s_wave);
  const StateVector p = basis_state(space, p_wave);

  // diagonal part shared by both hands
  LinearOperator diag{space};
  diag += outer_product(s, s);
  diag += outer_product(p, p);
  diag *= cplx{0.5, 0.0};

  // the cross term the closed form keeps
  LinearOperator cross{space};
  cross += outer_product(s, p);
  cross += outer_product(p, s);
  cross *= cplx{0.25, 0.0};

  ApproxTwirlComparison cmp{
      DensityMatrix::from_operator(diag + cross),
      DensityMatrix::from_operator(diag - cross),
      haar_twirl_exact(hand_state(entry.pair, +1)),
      haar_twirl_exact(hand_state(entry.pair, -1)),
      0.0,
      0.0};
  cmp.closed_form_trace_distance =
      trace_distance(cmp.closed_form_plus, cmp.closed_form_minus);
  cmp.exact_trace_distance = trace_distance(cmp.exact_plus, cmp.exact_minus);
  return cmp;
}

}  // namespace gloves
