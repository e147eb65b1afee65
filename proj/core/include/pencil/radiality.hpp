#pragma once

#include <span>
#include <vector>

#include "pencil/types.hpp"

namespace pencil {

struct RadialitySample {
    double s = 0.0;
    int n = 0;
    double right_norm = 0.0;  // s^n ||(R^E(s,A))^n||
    double left_norm = 0.0;   // s^n ||(L^E(s,A))^n||
};

/// Empirical Hille-Yosida-type power-bound sweep. K_estimate is the sup of
/// the scaled norms over the sampled grid; it is a lower bound for any
/// admissible radiality constant K (whose infimum is >= 1 whenever E != 0,
/// since s R^E(s,A) tends to a nonzero projection).
struct RadialityReport {
    double K_estimate = 0.0;
    std::vector<RadialitySample> samples;
    bool bounded = false;  // K_estimate <= cap
};

RadialityReport estimate_radiality(const Pencil& p,
                                   std::span<const double> s_grid, int n_max,
                                   double cap = 10.0, double rank_tol = -1.0);

}  // namespace pencil
