#include "grfem/linsolve.hpp"

#include <cmath>
#include <stdexcept>

namespace grfem {

Factorization::Factorization(const Eigen::SparseMatrix<double>& K)
    : K_(K), n_(static_cast<int>(K.rows())) {
  if (K.rows() != K.cols())
    throw std::invalid_argument("Factorization: matrix must be square");
  K_.makeCompressed();

  // Symmetric equilibration: D = diag(1/sqrt(max_j |K_ij|)).  Saddle systems
  // mix blocks with wildly different scales (stiffness ~mu vs. mass ~h^2/lambda);
  // factoring D K D keeps pivoting meaningful across the blocks.
  Eigen::VectorXd row_max = Eigen::VectorXd::Zero(n_);
  for (int col = 0; col < K_.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(K_, col); it; ++it)
      row_max(it.row()) = std::max(row_max(it.row()), std::abs(it.value()));
  scale_ = Eigen::VectorXd::Ones(n_);
  for (int i = 0; i < n_; ++i)
    if (row_max(i) > 0.0) scale_(i) = 1.0 / std::sqrt(row_max(i));

  Eigen::SparseMatrix<double> S = K_;
  for (int col = 0; col < S.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(S, col); it; ++it)
      it.valueRef() *= scale_(it.row()) * scale_(it.col());

  lu_.compute(S);
  if (lu_.info() != Eigen::Success)
    throw std::runtime_error("Factorization: singular matrix (" +
                             lu_.lastErrorMessage() + ")");
}

Eigen::VectorXd Factorization::solve(const Eigen::VectorXd& rhs) const {
  if (rhs.size() != n_)
    throw std::invalid_argument("Factorization::solve: size mismatch");
  Eigen::VectorXd x =
      scale_.asDiagonal() * lu_.solve((scale_.asDiagonal() * rhs).eval());
  if (lu_.info() != Eigen::Success)
    throw std::runtime_error("Factorization::solve: back substitution failed");
  // One step of iterative refinement on the unscaled system.
  const Eigen::VectorXd r = rhs - K_ * x;
  x += scale_.asDiagonal() * lu_.solve((scale_.asDiagonal() * r).eval());
  return x;
}

double solver_residual(const Eigen::SparseMatrix<double>& K,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& rhs) {
  const Eigen::VectorXd r = K * x - rhs;
  double knorm = 0.0;  // max row sum of |K|
  Eigen::VectorXd row_sums = Eigen::VectorXd::Zero(K.rows());
  for (int col = 0; col < K.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(K, col); it; ++it)
      row_sums(it.row()) += std::abs(it.value());
  if (K.rows() > 0) knorm = row_sums.maxCoeff();
  const double denom =
      knorm * x.lpNorm<Eigen::Infinity>() + rhs.lpNorm<Eigen::Infinity>();
  if (denom == 0.0) return r.lpNorm<Eigen::Infinity>();
  return r.lpNorm<Eigen::Infinity>() / denom;
}

}  // namespace grfem
