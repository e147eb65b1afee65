#include "pencil/analysis.hpp"

#include <algorithm>

#include "pencil/io.hpp"
#include "pencil/numeric.hpp"
#include "pencil/radiality.hpp"

namespace pencil {

namespace {

const char* bool_text(bool b) { return b ? "true" : "false"; }

void append_kv(std::string& out, const char* key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
}

template <typename T, typename F>
std::string or_skipped(const std::optional<T>& value, F&& fmt) {
    return value ? fmt(*value) : std::string("skipped");
}

}  // namespace

std::string AnalysisReport::to_text() const {
    std::string out;
    append_kv(out, "n", std::to_string(n));
    append_kv(out, "forward_ok", bool_text(diss.forward_ok));
    append_kv(out, "adjoint_ok", bool_text(diss.adjoint_ok));
    append_kv(out, "forward_abscissa", format_double(diss.forward_abscissa));
    append_kv(out, "adjoint_abscissa", format_double(diss.adjoint_abscissa));
    append_kv(out, "kernel_intersection_dim",
              std::to_string(diss.kernel_intersection_dim));
    append_kv(out, "resolvent_witness",
              diss.resolvent_witness ? format_double(*diss.resolvent_witness)
                                     : std::string("none"));
    append_kv(out, "lambda_min", format_double(lambda_min));
    append_kv(out, "lambda_max", format_double(lambda_max));
    append_kv(out, "lambda_steps", std::to_string(lambda_steps));
    append_kv(out, "resolvent_bounds_pass",
              or_skipped(resolvent_bounds_pass,
                         [](bool b) { return std::string(bool_text(b)); }));
    append_kv(out, "kernel_equivalence",
              or_skipped(kernel_equivalence,
                         [](bool b) { return std::string(bool_text(b)); }));
    append_kv(out, "radiality_K",
              or_skipped(radiality_K, [](double k) { return format_double(k); }));
    append_kv(out, "radiality_bounded",
              or_skipped(radiality_bounded,
                         [](bool b) { return std::string(bool_text(b)); }));
    append_kv(out, "decomposable", bool_text(decomposable));
    if (decomposable) {
        append_kv(out, "alpha_used", format_complex(*alpha_used));
        append_kv(out, "rank_E", std::to_string(rank_E));
        append_kv(out, "dim_X0", std::to_string(dim_X0));
        append_kv(out, "residual_P_idempotent",
                  format_double(residuals->P_idempotent));
        append_kv(out, "residual_Q_idempotent",
                  format_double(residuals->Q_idempotent));
        append_kv(out, "residual_AP_QA", format_double(residuals->intertwine_A));
        append_kv(out, "residual_EP_QE", format_double(residuals->intertwine_E));
        append_kv(out, "residual_E_X0", format_double(residuals->E_on_X0));
    }
    append_kv(out, "exit_status", exit_status);
    return out;
}

AnalysisReport analyze_pencil(const Pencil& p, const AnalysisOptions& opts) {
    AnalysisReport report;
    report.n = p.dim();
    report.lambda_min = opts.lambda_min;
    report.lambda_max = opts.lambda_max;
    report.lambda_steps = opts.lambda_steps;
    report.diss = check_dissipative(p, opts.tol);
    report.exit_status = "ok";

    if (!report.diss.resolvent_witness) {
        report.exit_status = "singular-pencil";
        return report;
    }

    const std::vector<double> grid =
        log_grid(opts.lambda_min, opts.lambda_max, opts.lambda_steps);

    if (report.diss.dissipative()) {
        // With both Hermitian conditions certified and a witness in hand,
        // a singular sample on (0, inf) would falsify the theory; let
        // SingularAtS surface.
        const auto samples = verify_resolvent_bounds(p, grid);
        report.resolvent_bounds_pass =
            std::all_of(samples.begin(), samples.end(),
                        [](const BoundSample& s) { return s.pass; });
    }
    if (report.diss.forward_ok) {
        report.kernel_equivalence = verify_kernel_equivalence(p, grid);
    }

    try {
        const RadialityReport rad =
            estimate_radiality(p, opts.radiality_grid, opts.radiality_n_max,
                               opts.radiality_cap);
        report.radiality_K = rad.K_estimate;
        report.radiality_bounded = rad.bounded;
    } catch (const SingularAtS&) {
        if (report.diss.dissipative()) {
            throw;
        }
        // A non-dissipative regular pencil may be singular on parts of the
        // positive axis; the estimate is simply unavailable there.
    }

    try {
        DecomposeOptions dopts;
        dopts.alpha = Complex(*report.diss.resolvent_witness, 0.0);
        const Decomposition d = decompose(p, dopts);
        report.decomposable = true;
        report.alpha_used = d.alpha_used;
        report.rank_E = d.rank();
        report.dim_X0 = d.kernel_dim();
        report.residuals = d.residuals;
    } catch (const NotDecomposable&) {
        report.exit_status = "not-decomposable";
    } catch (const DegenerateA0&) {
        report.exit_status = "degenerate-a0";
    }
    return report;
}

}  // namespace pencil
