#include "gloves/glove.hpp"

#include <cmath>

namespace gloves {

namespace {

LinearOperator span_projector(const SpaceSpec& space,
                              const std::vector<StateVector>& basis) {
  LinearOperator proj{space};
  for (const auto& v : basis) proj += outer_product(v, v);
  return proj;
}

}  // namespace

LinearOperator GlovePair::projector_plus() const {
  return span_projector(space, plus_basis);
}

LinearOperator GlovePair::projector_minus() const {
  return span_projector(space, minus_basis);
}

GlovePair construct_glove_pair(const IrrepBlock& even_block,
                               const IrrepBlock& odd_block,
                               const SpaceSpec& space) {
  if (even_block.two_L != odd_block.two_L)
    throw DimensionError("glove pair needs blocks of equal L");
  if (even_block.parity != 1 || odd_block.parity != -1)
    throw DomainError("glove pair needs one even and one odd block");
  const int dim = even_block.two_L + 1;
  if (static_cast<int>(even_block.basis.size()) != dim ||
      static_cast<int>(odd_block.basis.size()) != dim)
    throw DomainError("glove pair blocks must carry complete M ladders");
  for (const auto& v : even_block.basis)
    if (!(v.space() == space))
      throw DimensionError("glove pair blocks must live on the given space");
  for (const auto& v : odd_block.basis)
    if (!(v.space() == space))
      throw DimensionError("glove pair blocks must live on the given space");

  GlovePair pair{even_block.two_L == 0 ? GloveKind::StatePair
                                       : GloveKind::ProjectorPair,
                 space,
                 even_block.two_L,
                 {},
                 {}};
  const cplx half{1.0 / std::sqrt(2.0), 0.0};
  for (int m = 0; m < dim; ++m) {
    pair.plus_basis.push_back(half *
                              (even_block.basis[m] + odd_block.basis[m]));
    pair.minus_basis.push_back(half *
                               (even_block.basis[m] - odd_block.basis[m]));
  }
  return pair;
}

GlovePair glove_pair_from_states(StateVector plus, StateVector minus) {
  if (!(plus.space() == minus.space()))
    throw DimensionError("glove states must share a space");
  if (std::abs(norm(plus) - 1.0) > kOpTol ||
      std::abs(norm(minus) - 1.0) > kOpTol)
    throw DomainError("glove states must be normalized");
  if (std::abs(inner_product(plus, minus)) > kOpTol)
    throw DomainError("glove states must be orthogonal");
  const cplx swap_overlap = inner_product(apply_parity(plus), minus);
  if (std::abs(std::abs(swap_overlap) - 1.0) > kOpTol)
    throw DomainError("parity must exchange the two glove states");
  GlovePair pair{GloveKind::StatePair, plus.space(), -1, {}, {}};
  pair.plus_basis.push_back(std::move(plus));
  pair.minus_basis.push_back(std::move(minus));
  return pair;
}

LinearOperator chirality_operator(const GlovePair& pair, double gamma_plus) {
  if (gamma_plus == 0.0 || !std::isfinite(gamma_plus))
    throw DomainError("chirality rate must be nonzero and finite");
  LinearOperator chi = pair.projector_plus();
  chi -= pair.projector_minus();
  chi *= cplx{gamma_plus, 0.0};
  return chi;
}

}  // namespace gloves
