#include "pencil/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

namespace pencil {

double rank_threshold(const RealVector& sigma, Index rows, Index cols,
                      double rank_tol) {
    if (sigma.size() == 0) {
        return 0.0;
    }
    const double rel = rank_tol < 0.0
                           ? static_cast<double>(std::max(rows, cols)) *
                                 std::numeric_limits<double>::epsilon()
                           : rank_tol;
    return rel * sigma(0);
}

Index numerical_rank(const RealVector& sigma, Index rows, Index cols,
                     double rank_tol) {
    const double thresh = rank_threshold(sigma, rows, cols, rank_tol);
    Index rank = 0;
    while (rank < sigma.size() && sigma(rank) > thresh) {
        ++rank;
    }
    return rank;
}

RealVector singular_values(const Matrix& M) {
    if (M.rows() == 0 || M.cols() == 0) {
        return RealVector(0);
    }
    Eigen::BDCSVD<Matrix> svd(M);
    return svd.singularValues();
}

double operator_norm(const Matrix& M) {
    if (M.rows() == 0 || M.cols() == 0) {
        return 0.0;
    }
    // sigma_max^2 = lambda_max(M^* M); the Hermitian eigensolve is several
    // times cheaper than a full SVD and squaring does not hurt the largest
    // singular value.
    const Matrix gram = M.cols() <= M.rows() ? Matrix(M.adjoint() * M)
                                             : Matrix(M * M.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Matrix hermitian_part(const Matrix& M) { return 0.5 * (M + M.adjoint()); }

double max_hermitian_eigenvalue(const Matrix& herm) {
    if (herm.rows() == 0) {
        return 0.0;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

Matrix canonicalize_columns(Matrix B) {
    for (Index j = 0; j < B.cols(); ++j) {
        Index imax = 0;
        double amax = -1.0;
        for (Index i = 0; i < B.rows(); ++i) {
            const double a = std::abs(B(i, j));
            if (a > amax) {
                amax = a;
                imax = i;
            }
        }
        if (amax > 0.0) {
            const Complex phase = B(imax, j) / amax;
            B.col(j) /= phase;
        }
    }
    return B;
}

Matrix kernel_basis(const Matrix& M, double rank_tol) {
    Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeFullV);
    const RealVector sigma = svd.singularValues();
    const Index rank = numerical_rank(sigma, M.rows(), M.cols(), rank_tol);
    const Index null_dim = M.cols() - rank;
    return canonicalize_columns(svd.matrixV().rightCols(null_dim));
}

Matrix range_basis(const Matrix& M, double rank_tol) {
    if (M.cols() == 0) {
        return Matrix(M.rows(), 0);
    }
    Eigen::BDCSVD<Matrix> svd(M, Eigen::ComputeThinU);
    const RealVector sigma = svd.singularValues();
    const Index rank = numerical_rank(sigma, M.rows(), M.cols(), rank_tol);
    return canonicalize_columns(svd.matrixU().leftCols(rank));
}

Matrix solve(const Matrix& A, const Matrix& B) {
    return A.colPivHouseholderQr().solve(B);
}

Matrix matrix_exp(const Matrix& M) {
    if (M.rows() == 0) {
        return Matrix(0, 0);
    }
    return M.exp();
}

std::vector<double> log_grid(double lo, double hi, int count) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(std::max(count, 0)));
    if (count == 1) {
        grid.push_back(lo);
        return grid;
    }
    const double llo = std::log(lo);
    const double lhi = std::log(hi);
    for (int i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / (count - 1);
        grid.push_back(std::exp(llo + t * (lhi - llo)));
    }
    return grid;
}

}  // namespace pencil
