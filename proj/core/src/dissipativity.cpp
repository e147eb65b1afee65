#include "pencil/dissipativity.hpp"

#include <cmath>

#include "pencil/numeric.hpp"
#include "pencil/resolvent.hpp"

namespace pencil {

Index kernel_intersection_dim(const Pencil& p, double rank_tol) {
    const Index n = p.dim();
    Matrix stacked(2 * n, n);
    stacked.topRows(n) = p.E();
    stacked.bottomRows(n) = p.A();
    const RealVector sigma = singular_values(stacked);
    return n - numerical_rank(sigma, 2 * n, n, rank_tol);
}

std::optional<double> find_resolvent_witness(const Pencil& p, double rank_tol) {
    std::optional<double> best;
    double best_cond = 0.0;
    for (int k = 0; k <= 40; ++k) {
        const double lambda = std::ldexp(1.0, k);
        const ResolventSample sample = probe_resolvent(p, lambda, rank_tol);
        if (!sample.in_resolvent_set) {
            continue;
        }
        const double cond = *sample.condition_estimate;
        if (!best || cond < best_cond) {
            best = lambda;
            best_cond = cond;
        }
    }
    return best;
}

DissipativityReport check_dissipative(const Pencil& p, double tol) {
    DissipativityReport report;
    report.forward_abscissa =
        max_hermitian_eigenvalue(hermitian_part(p.E().adjoint() * p.A()));
    report.adjoint_abscissa =
        max_hermitian_eigenvalue(hermitian_part(p.E() * p.A().adjoint()));
    report.forward_ok = report.forward_abscissa <= tol;
    report.adjoint_ok = report.adjoint_abscissa <= tol;
    report.kernel_intersection_dim = kernel_intersection_dim(p);
    report.resolvent_witness = find_resolvent_witness(p);
    return report;
}

std::vector<BoundSample> verify_resolvent_bounds(const Pencil& p,
                                                 std::span<const double> lambdas,
                                                 double slack) {
    std::vector<BoundSample> samples;
    samples.reserve(lambdas.size());
    for (const double lambda : lambdas) {
        const Matrix res = resolvent(p, lambda);
        BoundSample sample;
        sample.lambda = lambda;
        sample.left_norm = operator_norm(p.E() * res);
        sample.right_norm = operator_norm(res * p.E());
        const double ceiling = (1.0 + slack) / lambda;
        sample.pass = sample.left_norm <= ceiling && sample.right_norm <= ceiling;
        samples.push_back(sample);
    }
    return samples;
}

bool verify_kernel_equivalence(const Pencil& p, std::span<const double> lambdas,
                               double rank_tol) {
    const Index n = p.dim();
    const bool trivial_intersection = kernel_intersection_dim(p, rank_tol) == 0;
    for (const double lambda : lambdas) {
        const Matrix T = lambda * p.E() - p.A();
        const RealVector sigma = singular_values(T);
        const bool trivial_kernel = numerical_rank(sigma, n, n, rank_tol) == n;
        if (trivial_kernel != trivial_intersection) {
            return false;
        }
    }
    return true;
}

}  // namespace pencil
