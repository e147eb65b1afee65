#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pencil/decomposition.hpp"
#include "pencil/dissipativity.hpp"
#include "pencil/types.hpp"

namespace pencil {

struct AnalysisOptions {
    double lambda_min = 1e-2;
    double lambda_max = 1e3;
    int lambda_steps = 25;
    double tol = 1e-10;
    std::vector<double> radiality_grid = {1.0, 10.0, 100.0, 1000.0};
    int radiality_n_max = 8;
    double radiality_cap = 10.0;
};

/// Flat, deterministic analysis record. Fields that require hypotheses the
/// pencil does not satisfy are left unset and print as "skipped".
struct AnalysisReport {
    Index n = 0;
    DissipativityReport diss;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    int lambda_steps = 0;
    std::optional<bool> resolvent_bounds_pass;
    std::optional<bool> kernel_equivalence;
    std::optional<double> radiality_K;
    std::optional<bool> radiality_bounded;
    bool decomposable = false;
    std::optional<Complex> alpha_used;
    Index rank_E = 0;
    Index dim_X0 = 0;
    std::optional<DecompositionResiduals> residuals;
    /// "ok", "singular-pencil", "not-decomposable" or "degenerate-a0".
    std::string exit_status;

    /// Key=value lines in a fixed order; byte-identical for identical inputs.
    std::string to_text() const;
};

/// Full analysis pipeline: dissipativity verdicts, resolvent-bound sweep,
/// kernel equivalence, radiality estimate and decomposition residuals.
AnalysisReport analyze_pencil(const Pencil& p, const AnalysisOptions& opts = {});

}  // namespace pencil
