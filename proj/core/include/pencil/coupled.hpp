#pragma once

#include <utility>

#include "pencil/types.hpp"

namespace pencil {

/// Block data of the coupled system
///   d/dt x = A1 x + A2 y,  0 = A3 x + A4 y,
/// equivalently the pencil E = blockdiag(I, 0), A = [A1 A2; A3 A4].
/// omega is the numerical abscissa of A1 and (M, omega) is the growth pair
/// of the semigroup generated by A1; M = 1 makes the pair constructive for
/// every matrix. omega0 = omega + M ||A2 A4^{-1} A3|| is the shift beyond
/// which the Schur complement stays invertible.
struct CoupledBlocks {
    Matrix A1;  // m x m
    Matrix A2;  // m x q
    Matrix A3;  // q x m
    Matrix A4;  // q x q, invertible
    double omega = 0.0;
    double M = 1.0;
    double omega0 = 0.0;

    Index m() const noexcept { return A1.rows(); }
    Index q() const noexcept { return A4.rows(); }
};

/// Validates shapes and the invertibility of A4, then fills in the derived
/// constants. Throws ShapeMismatch or SingularA4.
CoupledBlocks make_coupled(Matrix A1, Matrix A2, Matrix A3, Matrix A4,
                           double rank_tol = -1.0);

/// The (m+q) x (m+q) pencil with E = blockdiag(I_m, 0_q).
Pencil assemble(const CoupledBlocks& blocks);

/// Schur complement S1(mu) = mu - A1 + A2 A4^{-1} A3 (the always-defined
/// unfactored form; it agrees with (mu - A1)[I + (mu - A1)^{-1} A2 A4^{-1} A3]
/// whenever mu is off the spectrum of A1).
Matrix schur_complement(const CoupledBlocks& blocks, Complex mu);

/// Closed-form block resolvent (mu E - A)^{-1} assembled from the
/// three-factor product
///   [I 0; -A4^{-1}A3 I] blockdiag(S1(mu)^{-1}, -A4^{-1}) [I -A2A4^{-1}; 0 I].
/// Throws SingularSchur when S1(mu) is numerically singular.
Matrix block_resolvent(const CoupledBlocks& blocks, Complex mu,
                       double rank_tol = -1.0);

/// The closed-form oblique projections
///   P = [I 0; -A4^{-1}A3 0],  Q = [I -A2A4^{-1}; 0 0].
std::pair<Matrix, Matrix> closed_form_projections(const CoupledBlocks& blocks);

struct PowerFormulaResiduals {
    double right = 0.0;  // max entrywise gap for ((mu E - A)^{-1} E)^n
    double left = 0.0;   // max entrywise gap for (E (mu E - A)^{-1})^n
};

/// Compares the n-th powers of the numerically computed E-resolvents with
/// the closed forms
///   [S1^{-n} 0; -A4^{-1}A3 S1^{-n} 0]  and  [S1^{-n} -S1^{-n}A2A4^{-1}; 0 0].
PowerFormulaResiduals verify_power_formulas(const CoupledBlocks& blocks,
                                            Complex mu, int n,
                                            double rank_tol = -1.0);

}  // namespace pencil
