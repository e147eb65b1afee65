#include "pencil/integrator.hpp"

#include <cmath>
#include <string>

#include "pencil/numeric.hpp"

namespace pencil {

ConsistentIC consistent_ic(const Decomposition& d, const Vector& z0,
                           double tol) {
    const Index n = d.P.rows();
    if (z0.size() != n) {
        throw DimensionMismatch("consistent_ic: z0 has length " +
                                std::to_string(z0.size()) + ", expected " +
                                std::to_string(n));
    }
    const Index r = d.rank();
    const Index k = d.kernel_dim();

    ConsistentIC out;
    out.info.z0 = z0;
    const double norm_z0 = z0.norm();
    if (norm_z0 == 0.0) {
        out.x1 = Vector::Zero(r);
        out.info.consistency_residual = 0.0;
        return out;
    }

    // Orthogonal distance to ran E (basis_Z1 is orthonormal).
    const Vector z1_ortho = d.basis_Z1 * (d.basis_Z1.adjoint() * z0);
    out.info.consistency_residual = (z0 - z1_ortho).norm() / norm_z0;

    Matrix TZ(n, n);
    TZ.leftCols(r) = d.basis_Z1;
    TZ.rightCols(k) = d.basis_Z0;
    const Vector coords = TZ.colPivHouseholderQr().solve(z0);
    const double z0_component = (d.basis_Z0 * coords.tail(k)).norm();
    if (z0_component > tol * norm_z0) {
        throw InconsistentIC(z0_component / norm_z0,
                             "z0 has a Z^0 component of relative size " +
                                 std::to_string(z0_component / norm_z0) +
                                 "; the datum is not in ran E");
    }
    out.x1 = d.E1.colPivHouseholderQr().solve(coords.head(r));
    return out;
}

Trajectory simulate(const Decomposition& d, const Pencil& p, const Vector& x1_0,
                    double t_final, int steps) {
    if (x1_0.size() != d.rank()) {
        throw DimensionMismatch("simulate: coordinate vector has length " +
                                std::to_string(x1_0.size()) + ", expected " +
                                std::to_string(d.rank()));
    }
    if (steps < 1) {
        throw std::invalid_argument("simulate: steps must be positive");
    }
    if (t_final < 0.0) {
        throw std::invalid_argument("simulate: t_final must be nonnegative");
    }

    Trajectory traj;
    const auto record = [&](double t, const Vector& x1) {
        const Vector state = d.embed(x1);
        traj.times.push_back(t);
        traj.states.push_back(state);
        traj.ex_norms.push_back((p.E() * state).norm());
    };

    if (t_final == 0.0) {
        record(0.0, x1_0);
        return traj;
    }

    const double dt = t_final / steps;
    const Matrix propagator = matrix_exp(dt * d.G);
    Vector x1 = x1_0;
    record(0.0, x1);
    for (int i = 1; i <= steps; ++i) {
        x1 = propagator * x1;
        record(i * dt, x1);
    }
    return traj;
}

bool check_contraction(const Trajectory& traj, double slack) {
    for (std::size_t i = 1; i < traj.ex_norms.size(); ++i) {
        if (traj.ex_norms[i] > traj.ex_norms[i - 1] + slack) {
            return false;
        }
    }
    return true;
}

}  // namespace pencil
