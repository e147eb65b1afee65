#pragma once

#include <vector>

#include "pencil/types.hpp"

namespace pencil {

/// Relative threshold below which singular values count as zero.
/// A negative `rank_tol` selects the default max(rows, cols) * eps;
/// otherwise `rank_tol` itself is used. The returned threshold is
/// relative * sigma_max.
double rank_threshold(const RealVector& sigma, Index rows, Index cols,
                      double rank_tol = -1.0);

Index numerical_rank(const RealVector& sigma, Index rows, Index cols,
                     double rank_tol = -1.0);

/// Singular values of M, descending.
RealVector singular_values(const Matrix& M);

/// Operator 2-norm (largest singular value). Zero for empty matrices.
double operator_norm(const Matrix& M);

Matrix hermitian_part(const Matrix& M);

/// Largest eigenvalue of a Hermitian matrix.
double max_hermitian_eigenvalue(const Matrix& herm);

/// Orthonormal basis of ker M (right singular vectors of the trailing
/// singular values), columns phase-canonicalized.
Matrix kernel_basis(const Matrix& M, double rank_tol = -1.0);

/// Orthonormal basis of ran M (leading left singular vectors), columns
/// phase-canonicalized.
Matrix range_basis(const Matrix& M, double rank_tol = -1.0);

/// Multiplies each column by a unit phase so that its entry of largest
/// modulus becomes real and positive. Makes SVD-derived bases reproducible.
Matrix canonicalize_columns(Matrix B);

/// Solves A X = B for square invertible A (column-pivoted QR).
Matrix solve(const Matrix& A, const Matrix& B);

/// Matrix exponential (scaling-and-squaring).
Matrix matrix_exp(const Matrix& M);

/// Logarithmically spaced grid from lo to hi, inclusive.
std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace pencil
