// polarlab: characteristic-core and geometric-phase analysis of Mueller
// matrices and qubit channels.
//
//   polarlab validate M.csv
//   polarlab analyze-mueller M.json --probe 1,0,0,0
//   polarlab analyze-channel damping.json
//   polarlab synth ensemble.json --probe 1,0,0,0
//   polarlab synth --seed 7 --rank 3
//   polarlab sweep two_retarder.json --grid 0:3:200 --probe 1,0,0,0

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "polarlab/app.hpp"

namespace {

void add_common(CLI::App* cmd, polarlab::AnalysisRequest& req, std::string& out_path, std::string& format,
                bool input_required = true) {
    auto* in = cmd->add_option("input", req.input_path, "Input file");
    if (input_required) in->required();
    cmd->add_option("--out", out_path, "Write the report here instead of stdout");
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"auto", "json", "report", "table"}));

    auto& t = req.tol;
    cmd->add_option("--tol-physical", t.physical, "Negative-eigenvalue clamp")->capture_default_str();
    cmd->add_option("--tol-degenerate", t.degenerate_gap, "Eigenvalue gap flagged as degenerate")->capture_default_str();
    cmd->add_option("--tol-core", t.coherent_core, "P1 below which there is no coherent core")->capture_default_str();
    cmd->add_option("--tol-nonregular", t.nonregular, "Imaginary discriminant threshold")->capture_default_str();
    cmd->add_option("--tol-singular", t.singular, "Singular-value threshold for polar factors")->capture_default_str();
    cmd->add_option("--tol-pi-branch", t.pi_branch, "Distance from pi for the pi branch")->capture_default_str();
    cmd->add_option("--tol-phase", t.phase_undefined, "Overlap modulus below which the phase is undefined")->capture_default_str();
    cmd->add_option("--tol-tp", t.trace_preserving, "Trace-preservation deviation")->capture_default_str();
    cmd->add_option("--tol-hermitian", t.hermitian, "Hermiticity gate")->capture_default_str();
    cmd->add_option("--tol-unitary", t.unitary, "Unitarity gate")->capture_default_str();
    cmd->add_option("--tol-spinor", t.spinor_norm, "Spinor normalization gate")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"polarlab: geometric-phase carrier and coherent weight of depolarizing Mueller matrices and qubit channels"};
    app.require_subcommand(1);

    polarlab::AnalysisRequest req;
    std::string out_path;
    std::string format = "auto";
    std::string grid;
    std::uint64_t seed = 0;

    auto* validate = app.add_subcommand("validate", "Physical-realizability verdict for a Mueller matrix");
    add_common(validate, req, out_path, format);

    auto* analyze = app.add_subcommand("analyze-mueller", "Characteristic decomposition, AMG and phases");
    add_common(analyze, req, out_path, format);
    analyze->add_option("--probe", req.probes, "Probe: spinor re,im,re,im or Bloch x,y,z (repeatable)");

    auto* channel = app.add_subcommand("analyze-channel", "Choi-state characteristic core of a qubit channel");
    add_common(channel, req, out_path, format);

    auto* synth = app.add_subcommand("synth", "Mueller matrix from a Jones ensemble or a seeded generator");
    add_common(synth, req, out_path, format, false);
    synth->add_option("--probe", req.probes, "Probe for the oracle visibility (repeatable)");
    auto* seed_opt = synth->add_option("--seed", seed, "Seed for a random physical Mueller matrix");
    synth->add_option("--rank", req.rank, "Covariance rank for --seed")->check(CLI::Range(1, 4))->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "Visibility curve of a parameterized ensemble");
    add_common(sweep, req, out_path, format);
    sweep->add_option("--grid", grid, "start:stop:count")->required();
    sweep->add_option("--probe", req.probes, "Probe spinor or Bloch vector");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        req.mode = polarlab::parse_mode(name);
        if (format == "table") req.format = polarlab::Format::Table;
        else if (format == "json" || format == "report") req.format = polarlab::Format::Report;
        if (*seed_opt) req.seed = seed;
        if (req.mode == polarlab::Mode::Synth && req.input_path.empty() == !req.seed) {
            std::cerr << "synth: give either an ensemble file or --seed\n";
            return 1;
        }
        if (!grid.empty()) req.grid = polarlab::io::parse_grid(grid);
    } catch (const polarlab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return polarlab::exit_status(e.code());
    }

    const polarlab::RunResult result = polarlab::run_request(req);
    const std::string text = result.render();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 1;
        }
        out << text;
    }
    if (result.exit_status != 0 && result.report.contains("error")) {
        std::cerr << "error: " << result.report["error"]["message"].get<std::string>() << '\n';
    }
    return result.exit_status;
}
