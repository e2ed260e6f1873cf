#include "gloves/generators.hpp"

#include <cmath>

namespace gloves {

namespace {

double ladder_coefficient(int two_j, int two_m, int direction) {
  // sqrt(j(j+1) - m(m+direction)) with doubled inputs
  const double j = two_j / 2.0;
  const double m = two_m / 2.0;
  return std::sqrt(j * (j + 1.0) - m * (m + direction));
}

}  // namespace

Generators angular_momentum_generators(const SpaceSpec& space) {
  Generators gen{LinearOperator{space}, LinearOperator{space},
                 LinearOperator{space}};
  for (const auto& label : enumerate_basis(space)) {
    double mz = 0.0;
    for (const auto& fl : label) mz += fl.two_m / 2.0;
    gen.jz.set(label, label, cplx{mz, 0.0});
    for (std::size_t f = 0; f < label.size(); ++f) {
      const auto& fl = label[f];
      if (fl.two_m + 2 <= fl.two_j) {
        BasisLabel raised = label;
        raised[f].two_m += 2;
        gen.jplus.accumulate(raised, label,
                             cplx{ladder_coefficient(fl.two_j, fl.two_m, +1), 0.0});
      }
      if (fl.two_m - 2 >= -fl.two_j) {
        BasisLabel lowered = label;
        lowered[f].two_m -= 2;
        gen.jminus.accumulate(lowered, label,
                              cplx{ladder_coefficient(fl.two_j, fl.two_m, -1), 0.0});
      }
    }
  }
  return gen;
}

LinearOperator total_j_squared(const SpaceSpec& space) {
  Generators gen = angular_momentum_generators(space);
  LinearOperator jsq = compose(gen.jminus, gen.jplus);
  jsq += compose(gen.jz, gen.jz);
  jsq += gen.jz;
  return jsq;
}

}  // namespace gloves
