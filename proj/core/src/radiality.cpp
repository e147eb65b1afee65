#include "pencil/radiality.hpp"

#include <algorithm>

#include "pencil/numeric.hpp"
#include "pencil/resolvent.hpp"

namespace pencil {

RadialityReport estimate_radiality(const Pencil& p,
                                   std::span<const double> s_grid, int n_max,
                                   double cap, double rank_tol) {
    RadialityReport report;
    report.samples.reserve(s_grid.size() * static_cast<std::size_t>(n_max));
    for (const double s : s_grid) {
        // s^n ||X^n|| = ||(sX)^n||: accumulating the scaled operator keeps
        // the powers near unit size instead of pairing tiny norms with s^n.
        const Matrix scaled_right = s * right_e_resolvent(p, s, rank_tol);
        const Matrix scaled_left = s * left_e_resolvent(p, s, rank_tol);
        Matrix right_power = scaled_right;
        Matrix left_power = scaled_left;
        for (int n = 1; n <= n_max; ++n) {
            if (n > 1) {
                right_power = right_power * scaled_right;
                left_power = left_power * scaled_left;
            }
            RadialitySample sample;
            sample.s = s;
            sample.n = n;
            sample.right_norm = operator_norm(right_power);
            sample.left_norm = operator_norm(left_power);
            report.K_estimate = std::max(
                {report.K_estimate, sample.right_norm, sample.left_norm});
            report.samples.push_back(sample);
        }
    }
    report.bounded = report.K_estimate <= cap;
    return report;
}

}  // namespace pencil
