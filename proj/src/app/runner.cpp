#include "qmsd/app/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>

#include <nlohmann/json.hpp>

#include "qmsd/app/output.hpp"
#include "qmsd/qmsd.hpp"

#ifndef QMSD_VERSION
#define QMSD_VERSION "0.0.0"
#endif

namespace qmsd::app {

namespace {

using nlohmann::json;

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

json scales_json(const CharacteristicScales& s) {
    return {{"beta_per_J", s.beta},   {"t_b_s", s.t_b},       {"t_c_s", s.t_c},
            {"v_T_m_per_s", s.v_T},   {"lambda_T_m", s.lambda_T}, {"D_q_m2_per_s", s.D_q},
            {"Q_approx", s.Q_approx}};
}

// Writes the requested formats and records every file in the report.
class Emitter {
public:
    Emitter(const RunConfig& cfg, std::string command) : cfg_(cfg), hash_(cfg.hash_hex()) {
        report_.command = std::move(command);
    }

    void csv(const std::string& name, CsvTable table) {
        if (!cfg_.wants(OutputFormat::Csv)) return;
        table.comments.insert(table.comments.begin(),
                              "qmsd " + report_.command + " config_hash=" + hash_);
        write(name + ".csv", table.render());
    }

    void svg(const std::string& name, Plot plot) {
        if (!cfg_.wants(OutputFormat::Svg)) return;
        plot.comments.insert(plot.comments.begin(),
                             "qmsd " + report_.command + " config_hash=" + hash_);
        write(name + ".svg", plot.render(cfg_.timestamp ? std::optional(utc_timestamp())
                                                        : std::nullopt));
    }

    void meta(json results) {
        if (!cfg_.wants(OutputFormat::JsonMeta)) return;
        json j;
        j["command"] = report_.command;
        j["version"] = QMSD_VERSION;
        j["config"] = cfg_.to_json();
        j["config_hash"] = hash_;
        j["results"] = std::move(results);
        j["warnings"] = report_.warnings;
        if (cfg_.timestamp) j["timestamp"] = utc_timestamp();
        write(report_.command + ".meta.json", j.dump(2) + "\n");
    }

    void note(std::string key, std::string value) {
        report_.summary.emplace_back(std::move(key), std::move(value));
    }
    void note(std::string key, double value) { note(std::move(key), format_number(value)); }

    void warn(const std::vector<std::string>& warnings) {
        report_.warnings.insert(report_.warnings.end(), warnings.begin(), warnings.end());
    }

    RunReport& report() { return report_; }

private:
    void write(const std::string& file, const std::string& content) {
        const auto path = std::filesystem::path(cfg_.out_dir) / file;
        write_text_file(path, content);
        report_.files.push_back(path);
    }

    const RunConfig& cfg_;
    std::string hash_;
    RunReport report_;
};

struct Setup {
    PhysicalSystem sys;
    CharacteristicScales scales;
};

Setup setup(const RunConfig& cfg, int cells) {
    cfg.validate();
    Setup s{cfg.system_with_cells(cells), {}};
    s.scales = derive_scales(s.sys);
    return s;
}

std::string cell_tag(int cells) { return "L" + std::to_string(cells) + "a"; }

ReductionConfig reduction(const RunConfig& cfg) { return {cfg.block_rows, 0}; }

CsvTable curve_table(const MsdCurve& c, double t_b, double a) {
    CsvTable t;
    t.comments.push_back("method=" + std::string(to_string(c.method)));
    for (const auto& [k, v] : c.params) t.comments.push_back(k + "=" + v);
    t.columns = {"t_s", "t_over_tb", "msd_m2", "msd_over_a2"};
    for (std::size_t i = 0; i < c.times.size(); ++i) {
        t.add_row({c.times[i], c.times[i] / t_b, c.values[i], c.values[i] / (a * a)});
    }
    return t;
}

Series scaled_series(const MsdCurve& c, double t_unit, double y_unit, std::string label,
                     std::string color, std::string dash = {}) {
    Series s{std::move(label), {}, {}, std::move(color), std::move(dash)};
    for (std::size_t i = 0; i < c.times.size(); ++i) {
        s.x.push_back(c.times[i] / t_unit);
        s.y.push_back(c.values[i] / y_unit);
    }
    return s;
}

RunReport single_curve(const RunConfig& cfg, const std::string& command, const MsdCurve& curve,
                       const Setup& s, json results) {
    Emitter out(cfg, command);
    const double a = s.sys.lattice_a;
    const std::string name = command + "_" + cell_tag(s.sys.n_cells);
    out.csv(name, curve_table(curve, s.scales.t_b, a));
    Plot plot;
    plot.title = command + " MSD, " + cell_tag(s.sys.n_cells);
    plot.x_label = "t / t_b";
    plot.y_label = "MSD / a^2";
    plot.series.push_back(scaled_series(curve, s.scales.t_b, a * a,
                                        std::string(to_string(curve.method)), "#000000"));
    out.svg(name, std::move(plot));
    out.note("points", std::to_string(curve.times.size()));
    out.note("final_msd_over_a2", curve.values.back() / (a * a));
    results["scales"] = scales_json(s.scales);
    results["final_msd_m2"] = curve.values.back();
    out.meta(std::move(results));
    return out.report();
}

}  // namespace

RunReport run_scales(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.n_cells);
    Emitter out(cfg, "scales");
    const double kT = PhysicalConstants::k_B * s.sys.temperature;
    CsvTable t;
    t.columns = {"beta_per_J", "t_b_s", "t_c_s", "v_T_m_per_s", "lambda_T_m", "D_q_m2_per_s",
                 "Q_approx", "t_b_fs", "kT_meV"};
    t.add_row({s.scales.beta, s.scales.t_b, s.scales.t_c, s.scales.v_T, s.scales.lambda_T,
               s.scales.D_q, s.scales.Q_approx, units::s_to_fs(s.scales.t_b), units::J_to_meV(kT)});
    out.csv("scales", std::move(t));
    out.note("t_b_fs", units::s_to_fs(s.scales.t_b));
    out.note("t_c_over_t_b", s.scales.t_c / s.scales.t_b);
    out.note("v_T_m_per_s", s.scales.v_T);
    out.note("lambda_T_pm", units::m_to_pm(s.scales.lambda_T));
    out.note("D_q_m2_per_s", s.scales.D_q);
    out.note("kT_meV", units::J_to_meV(kT));
    out.note("Q_approx", s.scales.Q_approx);
    json results = scales_json(s.scales);
    results["kT_meV"] = units::J_to_meV(kT);
    out.meta(std::move(results));
    return out.report();
}

RunReport run_ideal(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.n_cells);
    const GridSpec spec = cfg.grid_or(default_grids::kQuick);
    const MsdCurve curve =
        msd_ideal_curve(IdealMsdParams::from(s.sys, s.scales), spec.materialize(s.scales.t_b));
    return single_curve(cfg, "ideal", curve, s, {{"grid", spec.to_string()}});
}

RunReport run_exact(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.n_cells);
    const GridSpec spec = cfg.grid_or(default_grids::kQuick);
    const EigenBasis basis = build_basis(s.sys, cfg.funcs_per_cell);
    const double Q = partition_function(basis);
    const MsdCurve curve =
        msd_exact_curve(basis, Q, spec.materialize(s.scales.t_b), reduction(cfg));
    auto report = single_curve(cfg, "exact", curve, s,
                               {{"grid", spec.to_string()},
                                {"basis_size", basis.size()},
                                {"partition_function", Q},
                                {"edge_weight", basis.edge_weight()}});
    report.warnings.insert(report.warnings.end(), basis.warnings().begin(), basis.warnings().end());
    return report;
}

RunReport run_collision(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.n_cells);
    const GridSpec spec = cfg.grid_or(default_grids::kQuick);
    const MsdCurve curve = msd_collision_model_curve(
        CollisionModelParams::from(cfg.alpha, s.sys, s.scales), spec.materialize(s.scales.t_b));
    return single_curve(cfg, "collision", curve, s,
                        {{"grid", spec.to_string()}, {"alpha", cfg.alpha}});
}

RunReport run_breve(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.n_cells);
    Emitter out(cfg, "breve");
    const EigenBasis basis = build_basis(s.sys, cfg.funcs_per_cell);
    out.warn(basis.warnings());
    const double Q = partition_function(basis);
    const double summed = breve_sum(basis, Q, reduction(cfg));
    const double closed = breve_closed(s.sys, s.scales);
    const double a2 = s.sys.lattice_a * s.sys.lattice_a;

    CsvTable t;
    t.columns = {"n_cells", "basis_size", "partition_function", "breve_sum_m2", "breve_closed_m2",
                 "breve_sum_over_a2", "breve_closed_over_a2"};
    t.add_row({static_cast<double>(s.sys.n_cells), static_cast<double>(basis.size()), Q, summed,
               closed, summed / a2, closed / a2});
    out.csv("breve_" + cell_tag(s.sys.n_cells), std::move(t));
    out.note("breve_sum_over_a2", summed / a2);
    out.note("breve_closed_over_a2", closed / a2);
    out.note("relative_difference", (closed - summed) / summed);
    out.meta({{"breve_sum_m2", summed},
              {"breve_closed_m2", closed},
              {"basis_size", basis.size()},
              {"partition_function", Q}});
    return out.report();
}

RunReport run_mc_verify(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.mc_n_cells);
    Emitter out(cfg, "mc-verify");
    const GridSpec spec = cfg.grid_or(default_grids::kMonteCarlo);
    const TimeGrid grid = spec.materialize(s.scales.t_b);
    const EigenBasis basis = build_basis(s.sys, cfg.funcs_per_cell);
    out.warn(basis.warnings());
    const double Q = partition_function(basis);

    const EnsembleResult mc = sample_msd(basis, Q, grid, cfg.members, cfg.seed);
    const MsdCurve exact = msd_exact_curve(basis, Q, grid, reduction(cfg));

    CsvTable t;
    t.comments.push_back("basis_size=" + std::to_string(basis.size()));
    t.comments.push_back("members=" + std::to_string(cfg.members) +
                         " seed=" + std::to_string(cfg.seed));
    t.columns = {"t_s", "t_over_tb", "mc_mean_m2", "mc_stderr_m2", "exact_m2", "z_score"};
    double worst_z = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double diff = std::abs(mc.mean_msd[i] - exact.values[i]);
        const double z = mc.std_error[i] > 0.0 ? diff / mc.std_error[i] : (diff == 0.0 ? 0.0 : INFINITY);
        worst_z = std::max(worst_z, z);
        t.add_row({grid[i], grid[i] / s.scales.t_b, mc.mean_msd[i], mc.std_error[i],
                   exact.values[i], z});
    }
    out.csv("mc_verify", std::move(t));

    const double t_rerandomized = 10.0 * s.scales.t_b;
    const RerandomizedEstimate rr =
        sample_msd_rerandomized(basis, Q, cfg.members, cfg.seed, t_rerandomized);
    const double plateau = breve_sum(basis, Q, reduction(cfg));
    const double rr_z = std::abs(rr.mean - plateau) / rr.std_error;

    const double a2 = s.sys.lattice_a * s.sys.lattice_a;
    Plot plot;
    plot.title = "Monte-Carlo random-phase ensemble vs exact sum, " + cell_tag(s.sys.n_cells);
    plot.x_label = "t / t_b";
    plot.y_label = "MSD / a^2";
    plot.series.push_back(scaled_series(exact, s.scales.t_b, a2, "exact sum", "#000000"));
    MsdCurve mc_curve{mc.times, mc.mean_msd, Method::MonteCarlo, {}};
    plot.series.push_back(scaled_series(mc_curve, s.scales.t_b, a2, "Monte Carlo mean", "#1f77b4", "4,3"));
    out.svg("mc_verify", std::move(plot));

    const bool ok = worst_z <= 3.0 && rr_z <= 3.0;
    out.report().verification_passed = ok;
    out.note("basis_size", std::to_string(basis.size()));
    out.note("max_z_score", worst_z);
    out.note("rerandomized_over_a2", rr.mean / a2);
    out.note("breve_sum_over_a2", plateau / a2);
    out.note("rerandomized_z_score", rr_z);
    out.note("verdict", ok ? "PASS" : "FAIL");
    out.meta({{"grid", spec.to_string()},
              {"basis_size", basis.size()},
              {"members", cfg.members},
              {"seed", cfg.seed},
              {"max_z_score", worst_z},
              {"rerandomized", {{"t_s", rr.t}, {"mean_m2", rr.mean}, {"stderr_m2", rr.std_error}}},
              {"breve_sum_m2", plateau},
              {"passed", ok}});
    return out.report();
}

RunReport run_scattering(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.n_cells);
    Emitter out(cfg, "scattering");
    const GridSpec spec = cfg.grid_or(default_grids::kScattering);
    const TimeGrid grid = spec.materialize(s.scales.t_b);

    Plot isf_plot;
    isf_plot.title = "Ideal-gas intermediate scattering function";
    isf_plot.x_label = "t / t_b";
    isf_plot.y_label = "|I(q,t)| sqrt(2 pi)";
    Plot phase_plot;
    phase_plot.title = "ISF phase";
    phase_plot.x_label = "t / t_b";
    phase_plot.y_label = "phase (rad)";
    Plot dsf_plot;
    dsf_plot.title = "Ideal-gas dynamic structure factor";
    dsf_plot.x_label = "hbar omega (meV)";
    dsf_plot.y_label = "S(q, omega) (ps)";

    static const char* kColors[] = {"#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd"};
    json per_q = json::array();
    for (std::size_t k = 0; k < cfg.q_inv_angstrom.size(); ++k) {
        const double q_ang = cfg.q_inv_angstrom[k];
        const ScatteringParams p{s.scales.v_T, s.scales.D_q, units::inv_angstrom_to_inv_m(q_ang)};
        const std::string tag = "q" + short_number(q_ang);
        const std::string color = kColors[k % 5];

        CsvTable isf_t;
        isf_t.comments.push_back("q_inv_angstrom=" + format_number(q_ang));
        isf_t.columns = {"t_s", "t_over_tb", "isf_abs", "isf_phase_rad", "isf_re", "isf_im"};
        Series isf_s{tag + " 1/A", {}, {}, color, {}};
        Series phase_s{tag + " 1/A", {}, {}, color, {}};
        for (double t : grid.times()) {
            const auto I = isf(p, t);
            const double phase = isf_phase(p, t);
            isf_t.add_row({t, t / s.scales.t_b, std::abs(I), phase, I.real(), I.imag()});
            isf_s.x.push_back(t / s.scales.t_b);
            isf_s.y.push_back(std::abs(I) * std::sqrt(2.0 * std::numbers::pi));
            phase_s.x.push_back(t / s.scales.t_b);
            phase_s.y.push_back(phase);
        }
        out.csv("isf_" + tag, std::move(isf_t));
        isf_plot.series.push_back(std::move(isf_s));
        phase_plot.series.push_back(std::move(phase_s));

        const double peak = p.D_q * p.q * p.q;
        const double width = p.v_T * std::abs(p.q);
        CsvTable dsf_t;
        dsf_t.comments.push_back("q_inv_angstrom=" + format_number(q_ang));
        dsf_t.columns = {"omega_rad_per_s", "hbar_omega_meV", "dsf_s"};
        Series dsf_s{tag + " 1/A", {}, {}, color, {}};
        constexpr int kPoints = 401;
        for (int i = 0; i < kPoints; ++i) {
            const double w = peak + width * (-6.0 + 12.0 * i / (kPoints - 1));
            const double S = dsf(p, w);
            const double e = units::J_to_meV(PhysicalConstants::hbar * w);
            dsf_t.add_row({w, e, S});
            dsf_s.x.push_back(e);
            dsf_s.y.push_back(S * 1e12);
        }
        out.csv("dsf_" + tag, std::move(dsf_t));
        dsf_plot.series.push_back(std::move(dsf_s));

        const double recoil_meV = units::J_to_meV(recoil_energy(p));
        out.note("recoil_meV_" + tag, recoil_meV);
        per_q.push_back({{"q_inv_angstrom", q_ang},
                         {"dsf_peak_omega_rad_per_s", peak},
                         {"recoil_energy_meV", recoil_meV},
                         {"dsf_fwhm_rad_per_s", 2.0 * std::sqrt(2.0 * std::log(2.0)) * width},
                         {"isf_phase_rate_rad_per_s", p.D_q * p.q * p.q / 2.0},
                         {"isf_phase_period_s", 4.0 * std::numbers::pi / (p.D_q * p.q * p.q)}});
    }
    out.svg("isf", std::move(isf_plot));
    out.svg("isf_phase", std::move(phase_plot));
    out.svg("dsf", std::move(dsf_plot));
    out.meta({{"grid", spec.to_string()}, {"scales", scales_json(s.scales)}, {"q", per_q}});
    return out.report();
}

RunReport run_figure1(const RunConfig& cfg) {
    const Setup s = setup(cfg, cfg.n_cells);
    Emitter out(cfg, "figure1");
    const GridSpec spec = cfg.grid_or(default_grids::kFigure1);
    const IdealMsdParams p = IdealMsdParams::from(s.sys, s.scales);
    const MsdCurve curve = msd_ideal_curve(p, spec.materialize(s.scales.t_b));
    const double unit = PhysicalConstants::hbar * s.scales.t_b / s.sys.mass;
    const double d = s.sys.dimensionality;

    CsvTable t;
    t.comments.push_back("method=ideal-analytic dimensionality=" + std::to_string(s.sys.dimensionality));
    t.columns = {"t_over_tb", "msd_over_hbar_tb_per_m", "asymptote_over_hbar_tb_per_m"};
    Series msd{"quantum MSD", {}, {}, "#000000", {}};
    Series asym{"2 D_q t", {}, {}, "#d62728", "6,4"};
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
        const double x = curve.times[i] / s.scales.t_b;
        const double line = d * 2.0 * s.scales.D_q * curve.times[i] / unit;
        t.add_row({x, curve.values[i] / unit, line});
        msd.x.push_back(x);
        msd.y.push_back(curve.values[i] / unit);
        asym.x.push_back(x);
        asym.y.push_back(line);
    }
    out.csv("figure1", std::move(t));

    Plot plot;
    plot.title = "Ideal free particle: ballistic to Brownian crossover";
    plot.x_label = "t / t_b";
    plot.y_label = "MSD / (hbar t_b / m)";
    plot.series = {std::move(msd), std::move(asym)};
    plot.markers.push_back({1.0, "t = t_b"});
    out.svg("figure1", std::move(plot));

    const double gap_end = (d * 2.0 * s.scales.D_q * curve.times.back() - curve.values.back()) / unit;
    out.note("t_b_fs", units::s_to_fs(s.scales.t_b));
    out.note("final_gap_over_hbar_tb_per_m", gap_end);
    out.meta({{"grid", spec.to_string()},
              {"scales", scales_json(s.scales)},
              {"unit_m2", unit},
              {"crossover_marker_t_over_tb", 1.0},
              {"final_gap_over_hbar_tb_per_m", gap_end}});
    return out.report();
}

RunReport run_figure2(const RunConfig& cfg) {
    cfg.validate();
    Emitter out(cfg, "figure2");
    const GridSpec spec = cfg.grid_or(default_grids::kFigure2);
    const Setup base = setup(cfg, cfg.figure_cells.front());
    const double t_b = base.scales.t_b;
    const double a = base.sys.lattice_a;
    const double a2 = a * a;
    const TimeGrid grid = spec.materialize(t_b);

    Plot plot;
    plot.title = "Quasi-ideal particle MSD in periodic super-cells";
    plot.log_x = spec.kind == GridSpec::Kind::Geometric;
    plot.x_label = "t / t_b";
    plot.y_label = "MSD / a^2";

    const MsdCurve ideal = msd_ideal_curve(IdealMsdParams::from(base.sys, base.scales), grid);
    out.csv("figure2_ideal", curve_table(ideal, t_b, a));
    plot.series.push_back(scaled_series(ideal, t_b, a2, "ideal (L -> inf)", "#000000"));

    static const char* kDashes[] = {"8,4", "3,3", "8,3,3,3", "1,2"};
    CsvTable plateaus;
    plateaus.columns = {"n_cells", "basis_size", "partition_function", "breve_sum_over_a2",
                        "breve_closed_over_a2", "late_mean_over_a2"};
    json per_cell = json::array();
    for (std::size_t k = 0; k < cfg.figure_cells.size(); ++k) {
        const int cells = cfg.figure_cells[k];
        const Setup s = setup(cfg, cells);
        const EigenBasis basis = build_basis(s.sys, cfg.funcs_per_cell);
        out.warn(basis.warnings());
        const double Q = partition_function(basis);
        const MsdCurve exact = msd_exact_curve(basis, Q, grid, reduction(cfg));
        const MsdCurve model =
            msd_collision_model_curve(CollisionModelParams::from(cfg.alpha, s.sys, s.scales), grid);
        const double summed = breve_sum(basis, Q, reduction(cfg));
        const double closed = breve_closed(s.sys, s.scales);

        // mean over the last 20% of the grid
        const std::size_t from = grid.size() - std::max<std::size_t>(1, grid.size() / 5);
        double late = 0.0;
        for (std::size_t i = from; i < grid.size(); ++i) late += exact.values[i];
        late /= static_cast<double>(grid.size() - from);

        const std::string tag = cell_tag(cells);
        out.csv("figure2_exact_" + tag, curve_table(exact, t_b, a));
        out.csv("figure2_collision_" + tag, curve_table(model, t_b, a));
        plateaus.add_row({static_cast<double>(cells), static_cast<double>(basis.size()), Q,
                          summed / a2, closed / a2, late / a2});

        const std::string dash = kDashes[k % 4];
        plot.series.push_back(scaled_series(exact, t_b, a2, "exact sum, L = " + std::to_string(cells) + "a",
                                            "#000000", dash));
        plot.series.push_back(scaled_series(model, t_b, a2,
                                            "collision model, L = " + std::to_string(cells) + "a",
                                            "#d62728", dash));
        out.note("breve_sum_over_a2_" + tag, summed / a2);
        out.note("breve_closed_over_a2_" + tag, closed / a2);
        out.note("late_mean_over_a2_" + tag, late / a2);
        per_cell.push_back({{"n_cells", cells},
                            {"basis_size", basis.size()},
                            {"partition_function", Q},
                            {"edge_weight", basis.edge_weight()},
                            {"breve_sum_m2", summed},
                            {"breve_closed_m2", closed},
                            {"late_mean_m2", late},
                            {"t_c_over_t_b", s.scales.t_c / s.scales.t_b}});
    }
    out.csv("figure2_breve", std::move(plateaus));
    out.svg("figure2", std::move(plot));
    out.meta({{"grid", spec.to_string()},
              {"alpha", cfg.alpha},
              {"block_rows", cfg.block_rows},
              {"scales", scales_json(base.scales)},
              {"cells", per_cell}});
    return out.report();
}

RunReport run_command(const std::string& command, const RunConfig& cfg) {
    if (command == "scales") return run_scales(cfg);
    if (command == "ideal") return run_ideal(cfg);
    if (command == "exact") return run_exact(cfg);
    if (command == "breve") return run_breve(cfg);
    if (command == "collision") return run_collision(cfg);
    if (command == "mc-verify") return run_mc_verify(cfg);
    if (command == "scattering") return run_scattering(cfg);
    if (command == "figure1") return run_figure1(cfg);
    if (command == "figure2") return run_figure2(cfg);
    throw ValidationError("command", "unknown subcommand '" + command + "'");
}

}  // namespace qmsd::app
