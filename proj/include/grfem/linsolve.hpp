#pragma once

#include <Eigen/Sparse>

namespace grfem {

// Sparse direct factorization (LU with partial pivoting).  Factorizations are
// deterministic: the same matrix yields bit-identical solutions.
class Factorization {
 public:
  explicit Factorization(const Eigen::SparseMatrix<double>& K);

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

  int size() const { return n_; }

 private:
  Eigen::SparseMatrix<double> K_;
  Eigen::VectorXd scale_;  // symmetric equilibration: lu_ factors D K D
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
  int n_ = 0;
};

// Scaled max-norm residual ||Kx - rhs||_inf / (||K||_inf ||x||_inf + ||rhs||_inf).
double solver_residual(const Eigen::SparseMatrix<double>& K,
                       const Eigen::VectorXd& x, const Eigen::VectorXd& rhs);

}  // namespace grfem
