#pragma once

#include <complex>

#include <Eigen/Dense>

#include "pencil/errors.hpp"

namespace pencil {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Linear operator pencil (E, A) of the differential-algebraic equation
/// d/dt(E x) = A x on the complex coordinate space C^n with the standard
/// inner product. Both matrices are n x n; all entries are finite.
class Pencil {
  public:
    Pencil(Matrix E, Matrix A);

    const Matrix& E() const noexcept { return E_; }
    const Matrix& A() const noexcept { return A_; }
    Index dim() const noexcept { return E_.rows(); }

  private:
    Matrix E_;
    Matrix A_;
};

}  // namespace pencil
