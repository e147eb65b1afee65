#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pencil/types.hpp"

namespace pencil {

/// Verdicts for the two Hermitian-form dissipativity conditions
/// Re<Ax, Ex> <= 0 and Re<A*x, E*x> <= 0.
struct DissipativityReport {
    bool forward_ok = false;
    bool adjoint_ok = false;
    /// Largest eigenvalue of the Hermitian part of E^* A.
    double forward_abscissa = 0.0;
    /// Largest eigenvalue of the Hermitian part of E A^*.
    double adjoint_abscissa = 0.0;
    Index kernel_intersection_dim = 0;
    /// A positive lambda found in the resolvent set, when one exists.
    std::optional<double> resolvent_witness;

    bool dissipative() const noexcept { return forward_ok && adjoint_ok; }
};

/// The condition Re<Ax, Ex> <= 0 for all x is equivalent to negative
/// semidefiniteness of the Hermitian part of E^* A, so both conditions are
/// decided by one extremal eigenvalue each.
DissipativityReport check_dissipative(const Pencil& p, double tol = 1e-10);

/// Probes lambda = 2^k, k = 0..40, and returns the best-conditioned
/// numerically invertible point, if any.
std::optional<double> find_resolvent_witness(const Pencil& p,
                                             double rank_tol = -1.0);

Index kernel_intersection_dim(const Pencil& p, double rank_tol = -1.0);

/// One row of a resolvent-bound sweep: the norms of E(lambda E - A)^{-1}
/// and (lambda E - A)^{-1} E against the ceiling 1/lambda.
struct BoundSample {
    double lambda = 0.0;
    double left_norm = 0.0;   // ||E (lambda E - A)^{-1}||
    double right_norm = 0.0;  // ||(lambda E - A)^{-1} E||
    bool pass = false;
};

/// Checks ||E(lambda E - A)^{-1}|| <= (1 + slack)/lambda and the mirrored
/// right bound on every sampled lambda. A singular sample throws
/// SingularAtS: for a certified dissipative pencil with a witness that
/// falsifies the positive-axis spectrum result and must surface.
std::vector<BoundSample> verify_resolvent_bounds(const Pencil& p,
                                                 std::span<const double> lambdas,
                                                 double slack = 1e-8);

/// Confirms that dim(ker A and ker E) = 0 holds exactly when
/// ker(lambda E - A) = 0 for every sampled lambda; returns the consistency
/// verdict of the three-way equivalence.
bool verify_kernel_equivalence(const Pencil& p, std::span<const double> lambdas,
                               double rank_tol = -1.0);

}  // namespace pencil
