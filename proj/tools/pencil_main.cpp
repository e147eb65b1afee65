// Command-line front end: text-format pencils in, reports and CSV out.
//
// Exit codes: 0 success, 2 parse error, 3 empty resolvent set / singular
// pencil, 4 inconsistent initial condition, 5 decomposition failure,
// 1 anything else. Diagnostics go to stderr only.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pencil/pencil.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw pencil::Error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw pencil::Error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw pencil::Error("failed writing '" + path + "'");
    }
}

pencil::Complex parse_alpha(const std::string& text) {
    const std::size_t sep = text.find(':');
    const auto parse_part = [&](std::string_view part) {
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size()) {
            throw pencil::Error("invalid --alpha value '" + text +
                                "'; expected 'auto' or '<re>:<im>'");
        }
        return value;
    };
    const std::string_view view(text);
    if (sep == std::string::npos) {
        return {parse_part(view), 0.0};
    }
    return {parse_part(view.substr(0, sep)), parse_part(view.substr(sep + 1))};
}

int status_exit_code(const std::string& status) {
    if (status == "ok") {
        return 0;
    }
    if (status == "singular-pencil") {
        return 3;
    }
    return 5;  // not-decomposable / degenerate-a0
}

struct AnalyzeArgs {
    std::string pencil_path;
    pencil::AnalysisOptions opts;
};

int run_analyze(const AnalyzeArgs& args) {
    const pencil::Pencil p = pencil::parse_pencil(read_file(args.pencil_path));
    const pencil::AnalysisReport report = pencil::analyze_pencil(p, args.opts);
    std::cout << report.to_text();
    return status_exit_code(report.exit_status);
}

struct DecomposeArgs {
    std::string pencil_path;
    std::string alpha = "auto";
    std::string out_prefix;
};

int run_decompose(const DecomposeArgs& args) {
    const pencil::Pencil p = pencil::parse_pencil(read_file(args.pencil_path));
    pencil::DecomposeOptions opts;
    if (args.alpha != "auto") {
        opts.alpha = parse_alpha(args.alpha);
    }
    const pencil::Decomposition d = pencil::decompose(p, opts);

    std::string prefix = args.out_prefix;
    if (prefix.empty()) {
        prefix = std::filesystem::path(args.pencil_path)
                     .replace_extension()
                     .string();
    }
    write_file(prefix + ".P", pencil::print_matrix(d.P));
    write_file(prefix + ".Q", pencil::print_matrix(d.Q));
    write_file(prefix + ".G", pencil::print_matrix(d.G));

    std::cout << "alpha_used=" << pencil::format_complex(d.alpha_used) << '\n'
              << "rank_E=" << d.rank() << '\n'
              << "dim_X0=" << d.kernel_dim() << '\n'
              << "residual_P_idempotent="
              << pencil::format_double(d.residuals.P_idempotent) << '\n'
              << "residual_Q_idempotent="
              << pencil::format_double(d.residuals.Q_idempotent) << '\n'
              << "residual_AP_QA="
              << pencil::format_double(d.residuals.intertwine_A) << '\n'
              << "residual_EP_QE="
              << pencil::format_double(d.residuals.intertwine_E) << '\n'
              << "residual_E_X0="
              << pencil::format_double(d.residuals.E_on_X0) << '\n';
    return 0;
}

struct SimulateArgs {
    std::string pencil_path;
    std::string z0_path;
    double t_final = 0.0;
    int steps = 0;
    std::string out_path;
};

int run_simulate(const SimulateArgs& args) {
    const pencil::Pencil p = pencil::parse_pencil(read_file(args.pencil_path));
    const pencil::Vector z0 = pencil::parse_vector(read_file(args.z0_path));
    const pencil::Decomposition d = pencil::decompose(p);
    const pencil::ConsistentIC ic = pencil::consistent_ic(d, z0);
    const pencil::Trajectory traj =
        pencil::simulate(d, p, ic.x1, args.t_final, args.steps);
    write_file(args.out_path, pencil::trajectory_csv(traj));
    return 0;
}

struct CoupledArgs {
    std::string a1, a2, a3, a4;
    std::string out_path;
};

int run_coupled(const CoupledArgs& args) {
    const pencil::CoupledBlocks blocks = pencil::make_coupled(
        pencil::parse_matrix(read_file(args.a1)),
        pencil::parse_matrix(read_file(args.a2)),
        pencil::parse_matrix(read_file(args.a3)),
        pencil::parse_matrix(read_file(args.a4)));
    write_file(args.out_path, pencil::print_pencil(pencil::assemble(blocks)));
    return 0;
}

struct DzektserArgs {
    int modes = 32;
    std::string out_path;
};

int run_dzektser(const DzektserArgs& args) {
    write_file(args.out_path,
               pencil::print_pencil(pencil::dzektser_pencil(args.modes)));
    return 0;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const pencil::ParseError*>(&e) ||
        dynamic_cast<const pencil::DimensionMismatch*>(&e) ||
        dynamic_cast<const pencil::ShapeMismatch*>(&e)) {
        return 2;
    }
    if (dynamic_cast<const pencil::SingularAtS*>(&e) ||
        dynamic_cast<const pencil::SingularA4*>(&e)) {
        return 3;
    }
    if (dynamic_cast<const pencil::InconsistentIC*>(&e)) {
        return 4;
    }
    if (dynamic_cast<const pencil::NotDecomposable*>(&e) ||
        dynamic_cast<const pencil::DegenerateA0*>(&e)) {
        return 5;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis toolkit for linear differential-algebraic pencils "
                 "d/dt(Ex) = Ax"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand(
        "analyze", "Dissipativity, resolvent bounds, radiality and splitting "
                   "report for a pencil file");
    analyze->add_option("pencil", analyze_args.pencil_path, "pencil file")
        ->required();
    analyze->add_option("--lambda-min", analyze_args.opts.lambda_min,
                        "lower end of the lambda sweep");
    analyze->add_option("--lambda-max", analyze_args.opts.lambda_max,
                        "upper end of the lambda sweep");
    analyze->add_option("--lambda-steps", analyze_args.opts.lambda_steps,
                        "points on the lambda sweep")
        ->check(CLI::PositiveNumber);
    analyze->add_option("--tol", analyze_args.opts.tol,
                        "dissipativity tolerance");

    DecomposeArgs decompose_args;
    auto* decompose = app.add_subcommand(
        "decompose", "Split the state space and write P, Q and the reduced "
                     "generator G");
    decompose->add_option("pencil", decompose_args.pencil_path, "pencil file")
        ->required();
    decompose->add_option("--alpha", decompose_args.alpha,
                          "'auto' or a resolvent point '<re>:<im>'");
    decompose->add_option("--out-prefix", decompose_args.out_prefix,
                          "prefix for the .P/.Q/.G output files");

    SimulateArgs simulate_args;
    auto* simulate = app.add_subcommand(
        "simulate", "Integrate d/dt(Ex) = Ax from a consistent datum z0");
    simulate->add_option("pencil", simulate_args.pencil_path, "pencil file")
        ->required();
    simulate->add_option("--z0", simulate_args.z0_path, "vector file with z0")
        ->required();
    simulate->add_option("--t-final", simulate_args.t_final, "final time")
        ->required()
        ->check(CLI::NonNegativeNumber);
    simulate->add_option("--steps", simulate_args.steps, "number of steps")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--out", simulate_args.out_path, "trajectory CSV path")
        ->required();

    CoupledArgs coupled_args;
    auto* coupled = app.add_subcommand(
        "coupled", "Assemble the coupled-system pencil from four block files");
    coupled->add_option("--a1", coupled_args.a1, "matrix file A1")->required();
    coupled->add_option("--a2", coupled_args.a2, "matrix file A2")->required();
    coupled->add_option("--a3", coupled_args.a3, "matrix file A3")->required();
    coupled->add_option("--a4", coupled_args.a4, "matrix file A4")->required();
    coupled->add_option("--out", coupled_args.out_path, "pencil file to write")
        ->required();

    DzektserArgs dzektser_args;
    auto* dzektser = app.add_subcommand(
        "dzektser", "Write the spectral Dzektser pencil with N sine modes");
    dzektser->add_option("--modes", dzektser_args.modes, "number of modes")
        ->required()
        ->check(CLI::Range(2, 100000));
    dzektser->add_option("--out", dzektser_args.out_path, "pencil file to write")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            return run_analyze(analyze_args);
        }
        if (decompose->parsed()) {
            return run_decompose(decompose_args);
        }
        if (simulate->parsed()) {
            return run_simulate(simulate_args);
        }
        if (coupled->parsed()) {
            return run_coupled(coupled_args);
        }
        if (dzektser->parsed()) {
            return run_dzektser(dzektser_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return 1;
}
