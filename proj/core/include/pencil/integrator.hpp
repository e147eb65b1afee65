#pragma once

#include <vector>

#include "pencil/decomposition.hpp"
#include "pencil/types.hpp"

namespace pencil {

/// The datum E x(0) = z0 together with its distance to ran E.
struct InitialCondition {
    Vector z0;
    double consistency_residual = 0.0;  // dist(z0, ran E) / ||z0||
};

struct ConsistentIC {
    Vector x1;  // x^1(0) = E1^{-1} (Z^1 coordinates of z0), length r
    InitialCondition info;
};

/// Accepts z0 when its oblique Z^0 component is below tol * ||z0||; throws
/// InconsistentIC otherwise.
ConsistentIC consistent_ic(const Decomposition& d, const Vector& z0,
                           double tol = 1e-8);

struct Trajectory {
    std::vector<double> times;
    std::vector<Vector> states;    // x(t_i), in ran P
    std::vector<double> ex_norms;  // ||E x(t_i)||
};

/// Propagates x^1(t) = exp(tG) x^1(0) on a uniform grid of `steps` intervals
/// over [0, t_final] (a single point when t_final = 0) and embeds the states.
/// The algebraic component stays identically zero: A0 is invertible, so the
/// homogeneous equation forces x^0 = 0.
Trajectory simulate(const Decomposition& d, const Pencil& p, const Vector& x1_0,
                    double t_final, int steps);

/// True iff ||E x(t)|| is non-increasing up to the slack.
bool check_contraction(const Trajectory& traj, double slack = 1e-10);

}  // namespace pencil
