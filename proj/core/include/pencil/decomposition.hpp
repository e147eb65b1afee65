#pragma once

#include <optional>
#include <span>
#include <utility>

#include "pencil/types.hpp"

namespace pencil {

struct DecompositionResiduals {
    double P_idempotent = 0.0;  // ||P^2 - P||
    double Q_idempotent = 0.0;  // ||Q^2 - Q||
    double intertwine_A = 0.0;  // ||AP - QA||
    double intertwine_E = 0.0;  // ||EP - QE||
    double E_on_X0 = 0.0;       // ||E basis_X0||
};

/// Non-orthogonal splitting X = X^0 + X^1, Z = Z^0 + Z^1 of a regular
/// index-<=1 pencil, with the oblique projections P (onto X^1 along ker E)
/// and Q (onto ran E along A(ker E)), the coordinate blocks E1, A1, A0 and
/// the reduced generators G = E1^{-1} A1 and H = A1 E1^{-1}.
///
/// Bases are orthonormal within each subspace (the sum itself is oblique),
/// so coordinate vectors inherit the ambient norm on each factor.
struct Decomposition {
    Matrix P;
    Matrix Q;
    Matrix basis_X0;  // n x k, spans ker E
    Matrix basis_X1;  // n x r, spans ran R^E(alpha, A)
    Matrix basis_Z0;  // n x k, spans A(ker E)
    Matrix basis_Z1;  // n x r, spans ran E
    Matrix E1;        // r x r, invertible
    Matrix A1;        // r x r
    Matrix A0;        // k x k, invertible
    Matrix G;         // E1^{-1} A1, generator on X^1 coordinates
    Matrix H;         // A1 E1^{-1}, generator on Z^1 coordinates
    Complex alpha_used;
    DecompositionResiduals residuals;

    Index rank() const noexcept { return basis_X1.cols(); }
    Index kernel_dim() const noexcept { return basis_X0.cols(); }

    /// Embeds X^1 coordinates into the ambient space.
    Vector embed(const Vector& x1) const { return basis_X1 * x1; }
};

struct DecomposeOptions {
    /// Spectral point used to form R^E(alpha, A); searched automatically
    /// when absent.
    std::optional<Complex> alpha;
    double rank_tol = -1.0;
};

/// Splits the spaces via SVD bases of ker E, ran R^E(alpha,A), ran E and
/// A(ker E). Throws NotDecomposable when either concatenated basis fails the
/// direct-sum certificate, SingularAtS when alpha is not a resolvent point
/// (or no witness is found in auto mode), and DegenerateA0 when the
/// algebraic block is singular.
Decomposition decompose(const Pencil& p, const DecomposeOptions& opts = {});

/// Independent oracle for the projections: evaluates s R^E(s, A) and
/// s L^E(s, A) along s_list and Richardson-extrapolates in 1/s from the two
/// largest values. Throws NoConvergence when the sampled sequence does not
/// stabilize (index >= 2 signature).
std::pair<Matrix, Matrix> projections_via_limit(const Pencil& p,
                                                std::span<const double> s_list,
                                                double rank_tol = -1.0);

/// Same with the default grid {1e2, 1e4, 1e6}.
std::pair<Matrix, Matrix> projections_via_limit(const Pencil& p);

struct IntertwiningResiduals {
    double A_side = 0.0;  // ||AP - QA|| / ||A||
    double E_side = 0.0;  // ||EP - QE|| / ||E||
};

IntertwiningResiduals verify_intertwining(const Decomposition& d,
                                          const Pencil& p);

}  // namespace pencil
