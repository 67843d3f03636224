// Command-line front end: one subcommand per reproducible artifact.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qmsd/app/config.hpp"
#include "qmsd/app/runner.hpp"
#include "qmsd/errors.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 2, kIoError = 3, kNumericalError = 4 };

}  // namespace

int main(int argc, char** argv) {
    using qmsd::app::RunConfig;

    CLI::App app{"Quantum mean square displacement of thermalized free particles", "qmsd"};
    app.set_config("--config", "", "Read options from a key = value file");
    app.require_subcommand(1, 1);
    app.fallthrough();

    RunConfig cfg;
    std::string preset;
    std::string grid_text;
    std::string formats_text = "csv,svg,json-meta";
    bool no_timestamp = false;

    app.add_option("--preset", preset, "Parameter preset: co-cu100 or xe-pt111");
    auto* mass = app.add_option("--mass-u", cfg.mass_u, "Particle mass (u)")->capture_default_str();
    auto* temp = app.add_option("--temperature-K", cfg.temperature_K, "Temperature (K)")
                     ->capture_default_str();
    auto* lattice = app.add_option("--lattice-pm", cfg.lattice_pm, "Lattice constant a (pm)")
                        ->capture_default_str();
    app.add_option("--n-cells", cfg.n_cells, "Super-cell length in lattice cells")->capture_default_str();
    app.add_option("--dimensionality", cfg.dimensionality, "Dimensionality d of the ideal MSD")
        ->capture_default_str();
    app.add_option("--funcs-per-cell", cfg.funcs_per_cell, "Basis functions per lattice cell")
        ->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Collision-model parameter")->capture_default_str();
    app.add_option("--members", cfg.members, "Monte-Carlo ensemble size")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Monte-Carlo seed")->capture_default_str();
    app.add_option("--mc-n-cells", cfg.mc_n_cells, "Super-cell size for mc-verify")->capture_default_str();
    app.add_option("--block-rows", cfg.block_rows, "Rows per reduction block of the exact sums")
        ->capture_default_str();
    app.add_option("--figure-cells", cfg.figure_cells, "Super-cell sizes for figure2")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--q", cfg.q_inv_angstrom, "Momentum transfers for scattering (1/Angstrom)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--grid", grid_text, "Time grid {linear|geometric}:<start>:<stop>:<count> in t_b");
    app.add_option("--out", cfg.out_dir, "Output directory")->capture_default_str();
    app.add_option("--formats", formats_text, "Comma list of csv, svg, json-meta")->capture_default_str();
    app.add_flag("--no-timestamp", no_timestamp, "Omit timestamps from SVG and JSON output");

    const char* commands[][2] = {
        {"scales", "Characteristic time, length and velocity scales"},
        {"ideal", "Ideal-particle MSD curve"},
        {"exact", "Exact basis-sum MSD on a periodic super-cell"},
        {"breve", "Decoherence plateau by basis sum and closed form"},
        {"collision", "Velocity-averaged collision-model MSD"},
        {"mc-verify", "Random-phase Monte-Carlo check of the exact sums"},
        {"scattering", "Ideal-gas ISF, ISF phase and DSF"},
        {"figure1", "Ideal-particle crossover figure"},
        {"figure2", "Quasi-ideal plateaus for several super-cells"},
    };
    for (const auto& [name, help] : commands) app.add_subcommand(name, help);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (!preset.empty()) {
            const auto& p = qmsd::app::find_preset(preset);
            if (mass->count() == 0) cfg.mass_u = p.mass_u;
            if (temp->count() == 0) cfg.temperature_K = p.temperature_K;
            if (lattice->count() == 0) cfg.lattice_pm = p.lattice_pm;
        }
        if (!grid_text.empty()) cfg.grid = qmsd::GridSpec::parse(grid_text);
        cfg.formats = qmsd::app::parse_formats(formats_text);
        cfg.timestamp = !no_timestamp;
        cfg.validate();

        const auto report = qmsd::app::run_command(command, cfg);
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
        for (const auto& [key, value] : report.summary) std::cout << key << " = " << value << '\n';
        for (const auto& f : report.files) std::cout << "wrote " << f.string() << '\n';
        return report.verification_passed ? kOk : kNumericalError;
    } catch (const qmsd::ValidationError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kConfigError;
    } catch (const qmsd::app::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const qmsd::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kIoError;
    }
}
