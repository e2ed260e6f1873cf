#include "gloves/op.hpp"

#include <cmath>

namespace gloves {

void LinearOperator::accumulate(const BasisLabel& row, const BasisLabel& col,
                                cplx value) {
  check_label(space_, row);
  check_label(space_, col);
  auto key = std::make_pair(row, col);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    if (std::abs(value) > kPruneTol) entries_.emplace(std::move(key), value);
    return;
  }
  it->second += value;
  if (std::abs(it->second) <= kPruneTol) entries_.erase(it);
}

void LinearOperator::set(const BasisLabel& row, const BasisLabel& col,
                         cplx value) {
  check_label(space_, row);
  check_label(space_, col);
  auto key = std::make_pair(row, col);
  if (std::abs(value) <= kPruneTol) {
    entries_.erase(key);
    return;
  }
  entries_[std::move(key)] = value;
}

cplx LinearOperator::entry(const BasisLabel& row, const BasisLabel& col) const {
  auto it = entries_.find(std::make_pair(row, col));
  return it == entries_.end() ? cplx{0.0, 0.0} : it->second;
}

LinearOperator& LinearOperator::operator*=(cplx scale) {
  if (std::abs(scale) <= kPruneTol) {
    entries_.clear();
    return *this;
  }
  for (auto& [key, value] : entries_) value *= scale;
  return *this;
}

LinearOperator& LinearOperator::operator+=(const LinearOperator& other) {
  if (!(space_ == other.space_))
    throw DimensionError("operator addition needs matching spaces");
  for (const auto& [key, value] : other.entries_)
    accumulate(key.first, key.second, value);
  return *this;
}

LinearOperator& LinearOperator::operator-=(const LinearOperator& other) {
  if (!(space_ == other.space_))
    throw DimensionError("operator subtraction needs matching spaces");
  for (const auto& [key, value] : other.entries_)
    accumulate(key.first, key.second, -value);
  return *this;
}

LinearOperator identity_operator(const SpaceSpec& space) {
  LinearOperator out{space};
  for (const auto& label : enumerate_basis(space))
    out.set(label, label, cplx{1.0, 0.0});
  return out;
}

LinearOperator outer_product(const StateVector& a, const StateVector& b) {
  if (!(a.space() == b.space()))
    throw DimensionError("outer product needs matching spaces");
  LinearOperator out{a.space()};
  for (const auto& [la, aa] : a.terms())
    for (const auto& [lb, ab] : b.terms())
      out.accumulate(la, lb, aa * std::conj(ab));
  return out;
}

StateVector apply(const LinearOperator& op, const StateVector& state) {
  if (!(op.space() == state.space()))
    throw DimensionError("operator application needs matching spaces");
  StateVector out{state.space()};
  for (const auto& [key, value] : op.entries()) {
    auto it = state.terms().find(key.second);
    if (it != state.terms().end())
      out.accumulate(key.first, value * it->second);
  }
  return out;
}

LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  if (!(a.space() == b.space()))
    throw DimensionError("operator composition needs matching spaces");
  // group b's entries by row label for the middle-index contraction
  std::map<BasisLabel, std::vector<std::pair<BasisLabel, cplx>>, LabelOrder>
      b_rows;
  for (const auto& [key, value] : b.entries())
    b_rows[key.first].emplace_back(key.second, value);
  LinearOperator out{a.space()};
  for (const auto& [key, va] : a.entries()) {
    auto it = b_rows.find(key.second);
    if (it == b_rows.end()) continue;
    for (const auto& [col, vb] : it->second)
      out.accumulate(key.first, col, va * vb);
  }
  return out;
}

LinearOperator adjoint(const LinearOperator& op) {
  LinearOperator out{op.space()};
  for (const auto& [key, value] : op.entries())
    out.set(key.second, key.first, std::conj(value));
  return out;
}

cplx trace(const LinearOperator& op) {
  cplx sum{0.0, 0.0};
  for (const auto& [key, value] : op.entries())
    if (key.first == key.second) sum += value;
  return sum;
}

double frobenius_norm(const LinearOperator& op) {
  double sq = 0.0;
  for (const auto& [key, value] : op.entries()) sq += std::norm(value);
  return std::sqrt(sq);
}

double max_abs_entry(const LinearOperator& op) {
  double best = 0.0;
  for (const auto& [key, value] : op.entries())
    best = std::max(best, std::abs(value));
  return best;
}

bool is_hermitian(const LinearOperator& op, double tol) {
  for (const auto& [key, value] : op.entries()) {
    cplx mirror = op.entry(key.second, key.first);
    if (std::abs(value - std::conj(mirror)) > tol) return false;
  }
  return true;
}

LinearOperator parity_operator(const SpaceSpec& space) {
  LinearOperator out{space};
  for (const auto& label : enumerate_basis(space))
    out.set(label, label, cplx{static_cast<double>(label_parity(label)), 0.0});
  return out;
}

LinearOperator parity_conjugate(const LinearOperator& op) {
  LinearOperator out{op.space()};
  for (const auto& [key, value] : op.entries()) {
    const int sign = label_parity(key.first) * label_parity(key.second);
    out.set(key.first, key.second, sign > 0 ? value : -value);
  }
  return out;
}

Eigen::VectorXcd to_dense(const StateVector& state) {
  auto index = basis_index(state.space());
  Eigen::VectorXcd vec = Eigen::VectorXcd::Zero(state.space().dimension());
  for (const auto& [label, amp] : state.terms()) vec(index.at(label)) = amp;
  return vec;
}

Eigen::MatrixXcd to_dense(const LinearOperator& op) {
  auto index = basis_index(op.space());
  const int dim = op.space().dimension();
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, value] : op.entries())
    mat(index.at(key.first), index.at(key.second)) = value;
  return mat;
}

StateVector state_from_dense(const SpaceSpec& space,
                             const Eigen::VectorXcd& vec) {
  auto basis = enumerate_basis(space);
  if (vec.size() != static_cast<Eigen::Index>(basis.size()))
    throw DimensionError("dense vector length does not match space dimension");
  StateVector out{space};
  for (std::size_t i = 0; i < basis.size(); ++i) out.set(basis[i], vec(i));
  return out;
}

LinearOperator operator_from_dense(const SpaceSpec& space,
                                   const Eigen::MatrixXcd& mat) {
  auto basis = enumerate_basis(space);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  if (mat.rows() != dim || mat.cols() != dim)
    throw DimensionError("dense matrix shape does not match space dimension");
  LinearOperator out{space};
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c)
      out.set(basis[r], basis[c], mat(r, c));
  return out;
}

DensityMatrix DensityMatrix::from_operator(LinearOperator op) {
  if (!is_hermitian(op, kOpTol))
    throw DomainError("density matrix must be hermitian");
  cplx tr = trace(op);
  if (std::abs(tr - cplx{1.0, 0.0}) > kOpTol)
    throw DomainError("density matrix must have unit trace");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_dense(op),
                                                         Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kOpTol)
    throw DomainError("density matrix must be positive semidefinite");
  return DensityMatrix{std::move(op)};
}

DensityMatrix DensityMatrix::pure(const StateVector& state) {
  double n = norm(state);
  if (std::abs(n - 1.0) > kOpTol)
    throw DomainError("pure density matrix needs a unit state");
  return DensityMatrix{outer_product(state, state)};
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (!(rho.space() == sigma.space()))
    throw DimensionError("trace distance needs matching spaces");
  Eigen::MatrixXcd diff = to_dense(rho.op()) - to_dense(sigma.op());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff,
                                                         Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double helstrom_success(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return 0.5 + 0.5 * trace_distance(rho, sigma);
}

double von_neumann_entropy(const DensityMatrix& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_dense(rho.op()),
                                                         Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (lambda > tol) entropy -= lambda * std::log2(lambda);
  }
  return entropy;
}

}  // namespace gloves
