#pragma once

#include <Eigen/Dense>
#include <map>
#include <utility>

#include "gloves/state.hpp"

namespace gloves {

// Sparse operator on the product basis, keyed by (row label, col label).
// Entries below kPruneTol are dropped, so iteration is deterministic.
class LinearOperator {
 public:
  struct KeyOrder {
    bool operator()(const std::pair<BasisLabel, BasisLabel>& a,
                    const std::pair<BasisLabel, BasisLabel>& b) const {
      if (label_less(a.first, b.first)) return true;
      if (label_less(b.first, a.first)) return false;
      return label_less(a.second, b.second);
    }
  };
  using EntryMap =
      std::map<std::pair<BasisLabel, BasisLabel>, cplx, KeyOrder>;

  explicit LinearOperator(SpaceSpec space) : space_(std::move(space)) {}

  const SpaceSpec& space() const { return space_; }
  const EntryMap& entries() const { return entries_; }

  void accumulate(const BasisLabel& row, const BasisLabel& col, cplx value);
  void set(const BasisLabel& row, const BasisLabel& col, cplx value);
  cplx entry(const BasisLabel& row, const BasisLabel& col) const;

  LinearOperator& operator*=(cplx scale);
  LinearOperator& operator+=(const LinearOperator& other);
  LinearOperator& operator-=(const LinearOperator& other);

  friend LinearOperator operator*(cplx scale, LinearOperator op) {
    op *= scale;
    return op;
  }
  friend LinearOperator operator+(LinearOperator a, const LinearOperator& b) {
    a += b;
    return a;
  }
  friend LinearOperator operator-(LinearOperator a, const LinearOperator& b) {
    a -= b;
    return a;
  }

 private:
  SpaceSpec space_;
  EntryMap entries_;
};

LinearOperator identity_operator(const SpaceSpec& space);

// |a><b|
LinearOperator outer_product(const StateVector& a, const StateVector& b);

StateVector apply(const LinearOperator& op, const StateVector& state);

LinearOperator compose(const LinearOperator& a, const LinearOperator& b);

LinearOperator adjoint(const LinearOperator& op);

cplx trace(const LinearOperator& op);

double frobenius_norm(const LinearOperator& op);

double max_abs_entry(const LinearOperator& op);

bool is_hermitian(const LinearOperator& op, double tol = kOpTol);

// Diagonal parity operator: +-1 per product label.
LinearOperator parity_operator(const SpaceSpec& space);

// P op P
LinearOperator parity_conjugate(const LinearOperator& op);

// Dense bridge, index order given by enumerate_basis.
Eigen::VectorXcd to_dense(const StateVector& state);
Eigen::MatrixXcd to_dense(const LinearOperator& op);
StateVector state_from_dense(const SpaceSpec& space,
                             const Eigen::VectorXcd& vec);
LinearOperator operator_from_dense(const SpaceSpec& space,
                                   const Eigen::MatrixXcd& mat);

// Unit-trace positive Hermitian operator. Construction validates hermiticity
// and trace within kOpTol and eigenvalue floor within kOpTol; failures throw
// DomainError.
class DensityMatrix {
 public:
  static DensityMatrix from_operator(LinearOperator op);
  static DensityMatrix pure(const StateVector& state);

  const LinearOperator& op() const { return op_; }
  const SpaceSpec& space() const { return op_.space(); }

 private:
  explicit DensityMatrix(LinearOperator op) : op_(std::move(op)) {}
  LinearOperator op_;
};

// (1/2) sum |eig(rho - sigma)|, computed on the dense bridge.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// 1/2 + trace_distance/2: best single-shot discrimination probability for an
// equal prior.
double helstrom_success(const DensityMatrix& rho, const DensityMatrix& sigma);

// Base-2 von Neumann entropy.
double von_neumann_entropy(const DensityMatrix& rho, double tol = kCompareTol);

}  // namespace gloves
