#include "gloves/state.hpp"

#include <cmath>

namespace gloves {

void StateVector::accumulate(const BasisLabel& label, cplx amplitude) {
  check_label(space_, label);
  auto it = terms_.find(label);
  if (it == terms_.end()) {
    if (std::abs(amplitude) > kPruneTol) terms_.emplace(label, amplitude);
    return;
  }
  it->second += amplitude;
  if (std::abs(it->second) <= kPruneTol) terms_.erase(it);
}

void StateVector::set(const BasisLabel& label, cplx amplitude) {
  check_label(space_, label);
  if (std::abs(amplitude) <= kPruneTol) {
    terms_.erase(label);
    return;
  }
  terms_[label] = amplitude;
}

cplx StateVector::amplitude(const BasisLabel& label) const {
  auto it = terms_.find(label);
  return it == terms_.end() ? cplx{0.0, 0.0} : it->second;
}

StateVector& StateVector::operator*=(cplx scale) {
  if (std::abs(scale) <= kPruneTol) {
    terms_.clear();
    return *this;
  }
  for (auto& [label, amp] : terms_) amp *= scale;
  return *this;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  if (!(space_ == other.space_))
    throw DimensionError("state addition needs matching spaces");
  for (const auto& [label, amp] : other.terms_) accumulate(label, amp);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  if (!(space_ == other.space_))
    throw DimensionError("state subtraction needs matching spaces");
  for (const auto& [label, amp] : other.terms_) accumulate(label, -amp);
  return *this;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (!(a.space() == b.space()))
    throw DimensionError("inner product needs matching spaces");
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  cplx sum{0.0, 0.0};
  if (ta.size() <= tb.size()) {
    for (const auto& [label, amp] : ta) {
      auto it = tb.find(label);
      if (it != tb.end()) sum += std::conj(amp) * it->second;
    }
  } else {
    for (const auto& [label, amp] : tb) {
      auto it = ta.find(label);
      if (it != ta.end()) sum += std::conj(it->second) * amp;
    }
  }
  return sum;
}

double norm(const StateVector& state) {
  double sq = 0.0;
  for (const auto& [label, amp] : state.terms()) sq += std::norm(amp);
  return std::sqrt(sq);
}

StateVector normalized(const StateVector& state) {
  double n = norm(state);
  if (n <= kPruneTol) throw DomainError("cannot normalize a zero state");
  StateVector out = state;
  out *= cplx{1.0 / n, 0.0};
  return out;
}

StateVector phase_fixed(const StateVector& state) {
  if (state.terms().empty()) return state;
  cplx lead = state.terms().begin()->second;
  double mag = std::abs(lead);
  StateVector out = state;
  out *= std::conj(lead) / mag;
  return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  std::vector<FactorSpec> factors = a.space().factors;
  factors.insert(factors.end(), b.space().factors.begin(),
                 b.space().factors.end());
  std::vector<std::vector<int>> groups = a.space().exchange_groups;
  const int shift = static_cast<int>(a.space().factors.size());
  for (auto g : b.space().exchange_groups) {
    for (int& i : g) i += shift;
    groups.push_back(std::move(g));
  }
  StateVector out{SpaceSpec{std::move(factors), std::move(groups)}};
  for (const auto& [la, aa] : a.terms()) {
    for (const auto& [lb, ab] : b.terms()) {
      BasisLabel label = la;
      label.insert(label.end(), lb.begin(), lb.end());
      out.accumulate(label, aa * ab);
    }
  }
  return out;
}

StateVector basis_state(const SpaceSpec& space, const BasisLabel& label) {
  StateVector out{space};
  out.set(label, cplx{1.0, 0.0});
  return out;
}

StateVector apply_parity(const StateVector& state) {
  StateVector out{state.space()};
  for (const auto& [label, amp] : state.terms())
    out.set(label, label_parity(label) > 0 ? amp : -amp);
  return out;
}

std::vector<int> lmax_footprint(const StateVector& state, double tol) {
  std::vector<int> out;
  for (const auto& fac : state.space().factors)
    out.push_back(fac.kind == FactorKind::Orbital ? 0 : -1);
  for (const auto& [label, amp] : state.terms()) {
    if (std::abs(amp) <= tol) continue;
    for (std::size_t i = 0; i < label.size(); ++i) {
      if (state.space().factors[i].kind != FactorKind::Orbital) continue;
      out[i] = std::max(out[i], label[i].two_j / 2);
    }
  }
  std::vector<int> orbital_only;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (state.space().factors[i].kind == FactorKind::Orbital)
      orbital_only.push_back(out[i]);
  return orbital_only;
}

}  // namespace gloves
