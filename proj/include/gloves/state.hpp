#pragma once

#include <map>

#include "gloves/space.hpp"
#include "gloves/types.hpp"

namespace gloves {

// Sparse vector over the product basis of a SpaceSpec. Amplitudes with
// modulus below kPruneTol are dropped on insertion, so iteration order over
// terms is always the canonical label order and is deterministic.
class StateVector {
 public:
  using TermMap = std::map<BasisLabel, cplx, LabelOrder>;

  explicit StateVector(SpaceSpec space) : space_(std::move(space)) {}

  const SpaceSpec& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Adds into the amplitude at label, validating the label shape.
  void accumulate(const BasisLabel& label, cplx amplitude);
  // Overwrites the amplitude at label.
  void set(const BasisLabel& label, cplx amplitude);
  cplx amplitude(const BasisLabel& label) const;

  StateVector& operator*=(cplx scale);
  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);

  friend StateVector operator*(cplx scale, StateVector state) {
    state *= scale;
    return state;
  }
  friend StateVector operator+(StateVector a, const StateVector& b) {
    a += b;
    return a;
  }
  friend StateVector operator-(StateVector a, const StateVector& b) {
    a -= b;
    return a;
  }

 private:
  SpaceSpec space_;
  TermMap terms_;
};

// <a|b>, antilinear in the first argument. Spaces must match.
cplx inner_product(const StateVector& a, const StateVector& b);

double norm(const StateVector& state);

// Scales to unit norm. Throws DomainError when the norm is below kPruneTol.
StateVector normalized(const StateVector& state);

// Multiplies by the phase making the first nonzero amplitude (canonical label
// order) real positive. Zero states pass through.
StateVector phase_fixed(const StateVector& state);

// Tensor product; factor lists concatenate, exchange groups of the right
// operand shift by the left operand's factor count.
StateVector tensor(const StateVector& a, const StateVector& b);

// Unit basis state |label>.
StateVector basis_state(const SpaceSpec& space, const BasisLabel& label);

// P|l,m> = (-1)^l |l,m> per orbital factor, spins untouched.
StateVector apply_parity(const StateVector& state);

// Largest l present per orbital factor among amplitudes above tol; spin
// factors are skipped. Zero state reports all zeros.
std::vector<int> lmax_footprint(const StateVector& state,
                                double tol = kPruneTol);

}  // namespace gloves
