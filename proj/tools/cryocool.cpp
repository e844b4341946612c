#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cryocool/bundled.hpp"
#include "cryocool/calibration.hpp"
#include "cryocool/fuechtbauer_ladenburg.hpp"
#include "cryocool/mccumber.hpp"
#include "cryocool/scenario.hpp"
#include "cryocool/spectrum_io.hpp"
#include "cryocool/version.hpp"

namespace cc = cryocool;
using cc::constants::nanometer;
using cc::detail::format_double;

namespace {

void write_text_output(const std::string& out_path, const std::string& text) {
    if (out_path == "-" || out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << text;
}

struct SweepFlags {
    std::string scenario;
    std::string lambda, power, diameter, qe;
    std::vector<std::string> sets;
    std::string solvent;
    std::string solvents_file;
    std::string out = "-";
    int threads = 1;
};

int cmd_sweep(const SweepFlags& f) {
    cc::scenarios::Scenario s = cc::scenarios::resolve_scenario(f.scenario);

    if (!f.solvent.empty()) {
        cc::brownian::SolventModel m;
        if (!f.solvents_file.empty()) {
            auto models = cc::brownian::load_solvent_models(f.solvents_file);
            auto it = std::find_if(models.begin(), models.end(),
                                   [&](const auto& sm) { return sm.name == f.solvent; });
            if (it == models.end())
                throw std::invalid_argument("solvent '" + f.solvent + "' not found in " +
                                            f.solvents_file);
            m = *it;
        } else {
            m = cc::brownian::builtin_solvent(f.solvent);
        }
        s.env.solvent = m;
    }

    std::vector<std::pair<std::string, std::string>> overrides;
    std::vector<std::string> axes;
    bool any_axis_flag = false;
    // a ':' makes the flag a sweep axis; a bare value pins the parameter
    auto handle = [&](const std::string& text, const char* axis, const char* grid_key,
                      const char* fixed_key, double fixed_scale) {
        if (text.empty()) return;
        any_axis_flag = true;
        if (text.find(':') != std::string::npos) {
            axes.emplace_back(axis);
            overrides.emplace_back(grid_key, text);
        } else {
            double v = cc::detail::parse_double(text, fixed_key) * fixed_scale;
            overrides.emplace_back(fixed_key, format_double(v));
        }
    };
    handle(f.power, "power", "sweep.power_grid_W", "beam.power_W", 1.0);
    handle(f.diameter, "diameter", "sweep.diameter_grid_m", "env.diameter_m", 1.0);
    handle(f.qe, "quantum_efficiency", "sweep.qe_grid", "species.quantum_efficiency", 1.0);
    handle(f.lambda, "wavelength", "sweep.wavelength_grid_nm", "beam.wavelength_m", nanometer);
    if (any_axis_flag) {
        std::string joined;
        for (const auto& a : axes) joined += (joined.empty() ? "" : ",") + a;
        overrides.emplace_back("sweep.axes", joined);
    }
    for (const auto& kv : f.sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
        overrides.emplace_back(std::string(cc::detail::trim(kv.substr(0, eq))),
                               std::string(cc::detail::trim(kv.substr(eq + 1))));
    }

    cc::scenarios::RunOptions opts;
    opts.threads = f.threads;
    cc::scenarios::RunOutput run = cc::scenarios::run_scenario(s, overrides, opts);
    write_text_output(f.out, run.table.to_string());
    std::cerr << run.summary << "\n";
    return run.valid_rows == 0 ? 1 : 0;
}

struct FigureCurve {
    std::string filename;
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> overrides;
};

std::vector<FigureCurve> figure_curves(const std::string& name) {
    std::vector<FigureCurve> curves;
    auto wavelength_axis = [](const std::string& grid) {
        return std::vector<std::pair<std::string, std::string>>{
            {"sweep.axes", "wavelength"}, {"sweep.wavelength_grid_nm", grid}};
    };
    auto qe_axis = [] {
        return std::vector<std::pair<std::string, std::string>>{{"sweep.axes", "quantum_efficiency"},
                                                                {"sweep.qe_grid", "0.6:1:81"}};
    };
    if (name == "fig2a" || name == "fig2c") {
        for (double p : {1e-3, 1e-2, 1e-1}) {
            FigureCurve c{name + "_P" + format_double(p) + "W.csv", "nv-vacuum",
                          wavelength_axis("705:800:191")};
            c.overrides.emplace_back("beam.power_W", format_double(p));
            curves.push_back(std::move(c));
        }
    } else if (name == "fig2b" || name == "fig2d") {
        FigureCurve c{name + ".csv", "nv-vacuum", qe_axis()};
        c.overrides.emplace_back("beam.power_W", "1");
        c.overrides.emplace_back("beam.wavelength_m", format_double(760.0 * nanometer));
        curves.push_back(std::move(c));
    } else if (name == "fig4a") {
        for (double p : {1e-4, 1e-3, 1e-2}) {
            FigureCurve c{name + "_P" + format_double(p) + "W.csv", "siv-vacuum",
                          wavelength_axis("742:800:117")};
            c.overrides.emplace_back("beam.power_W", format_double(p));
            curves.push_back(std::move(c));
        }
    } else if (name == "fig4b") {
        FigureCurve c{name + ".csv", "siv-vacuum", qe_axis()};
        c.overrides.emplace_back("beam.power_W", format_double(1e-4));
        c.overrides.emplace_back("beam.wavelength_m", format_double(750.0 * nanometer));
        curves.push_back(std::move(c));
    } else if (name == "fig6a" || name == "fig6b") {
        for (int d_um : {10, 20, 50, 100, 250}) {
            FigureCurve c{name + "_D" + std::to_string(d_um) + "um.csv", "nv-water",
                          wavelength_axis("722:800:79")};
            c.overrides.emplace_back("beam.power_W", "1");
            c.overrides.emplace_back("env.diameter_m",
                                     format_double(static_cast<double>(d_um) * 1e-6));
            curves.push_back(std::move(c));
        }
    } else {
        throw std::invalid_argument(
            "unknown figure '" + name +
            "' (valid: fig2a, fig2b, fig2c, fig2d, fig4a, fig4b, fig6a, fig6b)");
    }
    return curves;
}

int cmd_figure(const std::string& name, const std::string& outdir, int threads) {
    cc::scenarios::RunOptions opts;
    opts.threads = threads;
    if (!outdir.empty()) std::filesystem::create_directories(outdir);
    for (const auto& curve : figure_curves(name)) {
        cc::scenarios::Scenario s = cc::scenarios::resolve_scenario(curve.scenario);
        cc::scenarios::RunOutput run = cc::scenarios::run_scenario(s, curve.overrides, opts);
        std::string path = outdir.empty() ? curve.filename : outdir + "/" + curve.filename;
        write_text_output(path, run.table.to_string());
        std::cerr << "wrote " << path << " (" << run.summary << ")\n";
    }
    return 0;
}

int cmd_mean_lambda(const std::string& source) {
    cc::spectra::Spectrum sp = cc::spectra::bundled::resolve_spectrum_source(source);
    double lambda_f = cc::spectra::mean_fluorescence_wavelength(sp);
    std::cout << "lambda_F_nm = " << format_double(lambda_f / nanometer) << "\n";
    return 0;
}

struct DeriveSivFlags {
    std::string src = "bundled:siv-pl";
    double T = 0.0;
    double zpl = 738.0 * nanometer;
    double tau = 1.2e-9;
    double n_refr = 2.4;
    double de_lower_ev = 0.2e-3;
    double de_upper_ev = 1.05e-3;
    int d_lower = 2;
    int d_upper = 2;
    std::string out = "-";
};

int cmd_derive_siv_abs(const DeriveSivFlags& f) {
    cc::spectra::Spectrum src = cc::spectra::bundled::resolve_spectrum_source(f.src);
    std::vector<std::string> comments = {"derived = reciprocity absorption from emission",
                                         "source = " + f.src, "T_K = " + format_double(f.T),
                                         "lambda_ZL_m = " + format_double(f.zpl)};
    cc::spectra::Spectrum sigma_se = [&] {
        if (src.kind() == cc::spectra::SpectrumKind::Intensity) {
            comments.push_back("tau_rad_s = " + format_double(f.tau));
            comments.push_back("n_refractive = " + format_double(f.n_refr));
            return cc::spectra::fl_emission_cross_section(src, f.tau, f.n_refr);
        }
        return src;
    }();
    auto levels = cc::spectra::DoubletStructure::from_ev(f.de_lower_ev, f.de_upper_ev, f.d_lower,
                                                         f.d_upper, f.zpl);
    cc::spectra::Spectrum sigma_abs = cc::spectra::absorption_from_emission(sigma_se, f.T, levels);
    std::ostringstream os;
    cc::spectra::write_spectrum(os, sigma_abs, comments);
    write_text_output(f.out, os.str());
    return 0;
}

struct CalibrateFlags {
    std::string input;
    std::string anchor;
    double ref_power = 200e-6;
    double meas_power = 200e-6;
    std::string out = "-";
};

int cmd_calibrate_nv_abs(const CalibrateFlags& f) {
    auto colon = f.anchor.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("--anchor expects '<wavelength_m>:<cross_section_m2>'");
    cc::spectra::CalibrationAnchor anchor{
        cc::detail::parse_double(f.anchor.substr(0, colon), "anchor wavelength"),
        cc::detail::parse_double(f.anchor.substr(colon + 1), "anchor cross section"), f.ref_power,
        f.meas_power};
    cc::spectra::Spectrum rel = cc::spectra::bundled::resolve_spectrum_source(f.input);
    cc::spectra::Spectrum calibrated = cc::spectra::calibrate_absorption(rel, anchor);
    std::ostringstream os;
    cc::spectra::write_spectrum(
        os, calibrated,
        {"derived = absolute absorption from relative emission signal", "source = " + f.input,
         "anchor_wavelength_m = " + format_double(anchor.ref_wavelength),
         "anchor_cross_section_m2 = " + format_double(anchor.ref_cross_section),
         "ref_power_W = " + format_double(anchor.ref_power),
         "measurement_power_W = " + format_double(anchor.measurement_power)});
    write_text_output(f.out, os.str());
    return 0;
}

int cmd_list() {
    std::cout << "scenarios:\n";
    for (const auto& n : cc::scenarios::builtin_scenario_names()) {
        cc::scenarios::Scenario s = cc::scenarios::builtin_scenario(n);
        std::cout << "  " << n << "  (" << s.species.name << ", "
                  << (s.env.load_kind == cc::cooling::ThermalLoadKind::VacuumRadiative
                          ? "vacuum radiative load"
                          : "liquid convective load")
                  << ", D = " << cc::detail::format_double_msg(s.env.diameter / 1e-6) << " um)\n";
    }
    std::cout << "bundled spectra (parametric reconstructions):\n";
    for (const auto& n : cc::spectra::bundled::names()) {
        const auto& sp = cc::spectra::bundled::by_name(n);
        std::cout << "  " << n << "  " << to_string(sp.kind()) << "  "
                  << cc::detail::format_double_msg(sp.min_wavelength() / nanometer) << "-"
                  << cc::detail::format_double_msg(sp.max_wavelength() / nanometer) << " nm\n";
    }
    std::cout << "builtin solvents:\n";
    for (const auto& m : {cc::brownian::d2o_solvent(), cc::brownian::h2o_solvent()}) {
        std::cout << "  " << m.name << "  eta_inf = " << cc::detail::format_double_msg(m.eta_infinity)
                  << " Pa s, A = " << cc::detail::format_double_msg(m.A_vogel)
                  << " K, T_VF = " << cc::detail::format_double_msg(m.T_VF) << " K"
                  << (m.name == "H2O" ? "  (generic handbook fit)" : "") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Stokes cryocooling model for NV/SiV-doped diamond microcrystals"};
    app.set_version_flag("--version", std::string("cryocool ") + cc::version);
    app.require_subcommand(1);

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "run a scenario sweep and emit a CSV table");
    sweep->add_option("--scenario", sweep_flags.scenario, "builtin scenario name or scenario file")
        ->required();
    sweep->add_option("--lambda", sweep_flags.lambda,
                      "pump wavelength in nm: value or start:stop:count");
    sweep->add_option("--power", sweep_flags.power, "beam power in W: value or start:stop:count");
    sweep->add_option("--diameter", sweep_flags.diameter,
                      "particle diameter in m: value or start:stop:count");
    sweep->add_option("--qe", sweep_flags.qe, "quantum efficiency: value or start:stop:count");
    sweep->add_option("--set", sweep_flags.sets, "override any scenario key, key=value")
        ->take_all();
    sweep->add_option("--solvent", sweep_flags.solvent, "solvent name (builtin or from --solvents-file)");
    sweep->add_option("--solvents-file", sweep_flags.solvents_file,
                      "solvent list file: name, eta_infinity_Pa_s, A_K, T_VF_K");
    sweep->add_option("--out", sweep_flags.out, "output CSV path ('-' = stdout)");
    sweep->add_option("--threads", sweep_flags.threads, "worker threads (output is identical)");

    auto* spectrum = app.add_subcommand("spectrum", "spectrum derivation utilities");
    spectrum->require_subcommand(1);

    std::string mean_source;
    auto* mean = spectrum->add_subcommand("mean-lambda", "print the mean fluorescence wavelength");
    mean->add_option("source", mean_source, "spectrum source (bundled:<name> or file)")->required();

    DeriveSivFlags derive_flags;
    auto* derive = spectrum->add_subcommand(
        "derive-siv-abs", "derive the SiV absorption cross section via reciprocity");
    derive->add_option("--src", derive_flags.src, "emission source (intensity or cross-section)");
    derive->add_option("--T", derive_flags.T, "temperature in K")->required();
    derive->add_option("--zpl", derive_flags.zpl, "zero-phonon-line wavelength in m");
    derive->add_option("--tau", derive_flags.tau, "radiative lifetime in s (intensity input only)");
    derive->add_option("--n", derive_flags.n_refr, "refractive index (intensity input only)");
    derive->add_option("--dE-lower", derive_flags.de_lower_ev, "lower doublet splitting in eV");
    derive->add_option("--dE-upper", derive_flags.de_upper_ev, "upper doublet splitting in eV");
    derive->add_option("--d-lower", derive_flags.d_lower, "lower doublet level count");
    derive->add_option("--d-upper", derive_flags.d_upper, "upper doublet level count");
    derive->add_option("--out", derive_flags.out, "output spectrum path ('-' = stdout)");

    CalibrateFlags cal_flags;
    auto* calibrate = spectrum->add_subcommand(
        "calibrate-nv-abs", "scale a relative emission signal to an absolute absorption spectrum");
    calibrate->add_option("input", cal_flags.input, "relative-signal spectrum file")->required();
    calibrate->add_option("--anchor", cal_flags.anchor, "<wavelength_m>:<cross_section_m2>")
        ->required();
    calibrate->add_option("--ref-power", cal_flags.ref_power, "excitation power at the anchor, W");
    calibrate->add_option("--meas-power", cal_flags.meas_power, "excitation power elsewhere, W");
    calibrate->add_option("--out", cal_flags.out, "output spectrum path ('-' = stdout)");

    std::string figure_name, figure_outdir = ".";
    int figure_threads = 1;
    auto* figure = app.add_subcommand("figure", "emit the CSV tables behind a named figure");
    figure->add_option("name", figure_name, "fig2a, fig2b, fig2c, fig2d, fig4a, fig4b, fig6a, fig6b")
        ->required();
    figure->add_option("--outdir", figure_outdir, "output directory");
    figure->add_option("--threads", figure_threads, "worker threads (output is identical)");

    auto* list = app.add_subcommand("list", "list builtin scenarios, bundled spectra and solvents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(sweep)) return cmd_sweep(sweep_flags);
        if (app.got_subcommand(spectrum)) {
            if (spectrum->got_subcommand(mean)) return cmd_mean_lambda(mean_source);
            if (spectrum->got_subcommand(derive)) return cmd_derive_siv_abs(derive_flags);
            if (spectrum->got_subcommand(calibrate)) return cmd_calibrate_nv_abs(cal_flags);
        }
        if (app.got_subcommand(figure)) return cmd_figure(figure_name, figure_outdir, figure_threads);
        if (app.got_subcommand(list)) return cmd_list();
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
