#ifndef CRYOCOOL_SCENARIO_HPP_
#define CRYOCOOL_SCENARIO_HPP_

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cryocool/bundled.hpp"
#include "cryocool/brownian.hpp"
#include "cryocool/cooling.hpp"
#include "cryocool/datapath.hpp"
#include "cryocool/format.hpp"
#include "cryocool/grid.hpp"
#include "cryocool/table.hpp"
#include "cryocool/version.hpp"

// Named, reproducible parameter bundles and the sweep driver that turns them
// into CSV-ready tables.
namespace cryocool::scenarios {

enum class SweepAxis { Wavelength, Power, Diameter, QuantumEfficiency };

inline const char* axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::Wavelength: return "wavelength";
        case SweepAxis::Power: return "power";
        case SweepAxis::Diameter: return "diameter";
        case SweepAxis::QuantumEfficiency: return "quantum_efficiency";
    }
    return "?";
}

inline SweepAxis axis_from_name(std::string_view name) {
    if (name == "wavelength") return SweepAxis::Wavelength;
    if (name == "power") return SweepAxis::Power;
    if (name == "diameter") return SweepAxis::Diameter;
    if (name == "quantum_efficiency" || name == "qe") return SweepAxis::QuantumEfficiency;
    throw std::invalid_argument("unknown sweep axis '" + std::string(name) +
                                "' (valid: wavelength, power, diameter, quantum_efficiency)");
}

/// Sweep configuration: which axes vary, and the grid per axis. Grids are
/// kept in their interface units (wavelength in nm, the rest in SI).
struct SweepConfig {
    std::vector<SweepAxis> axes;
    std::optional<GridSpec> wavelength_grid_nm;
    std::optional<GridSpec> power_grid_W;
    std::optional<GridSpec> diameter_grid_m;
    std::optional<GridSpec> qe_grid;

    std::optional<GridSpec>& grid_for(SweepAxis a) {
        switch (a) {
            case SweepAxis::Wavelength: return wavelength_grid_nm;
            case SweepAxis::Power: return power_grid_W;
            case SweepAxis::Diameter: return diameter_grid_m;
            case SweepAxis::QuantumEfficiency: return qe_grid;
        }
        return wavelength_grid_nm;
    }
    const std::optional<GridSpec>& grid_for(SweepAxis a) const {
        return const_cast<SweepConfig*>(this)->grid_for(a);
    }
};

struct Scenario {
    std::string name;
    cooling::DefectSpecies species;
    cooling::ParticleEnvironment env;
    cooling::BeamParams beam;
    std::string sigma_abs_source;
    std::string sigma_se_source;
    SweepConfig sweep;

    void validate() const {
        species.validate();
        env.validate();
        beam.validate();
        if (sigma_abs_source.empty() || sigma_se_source.empty())
            throw std::invalid_argument("scenario '" + name + "': spectrum sources must be set");
        if (sweep.axes.size() > 2)
            throw std::invalid_argument("scenario '" + name + "': at most two sweep axes");
        std::set<SweepAxis> seen;
        for (SweepAxis a : sweep.axes) {
            if (!seen.insert(a).second)
                throw std::invalid_argument("scenario '" + name + "': duplicate sweep axis " +
                                            axis_name(a));
            if (!sweep.grid_for(a))
                throw std::invalid_argument("scenario '" + name + "': sweep axis " + axis_name(a) +
                                            " has no grid");
        }
    }
};

// ---------------------------------------------------------------- builtins

/// Built-in parameter bundles. Ambient temperature defaults to 295 K (stated
/// in every output header); the default sweep grids are reconstructions, not
/// measured settings.
inline Scenario builtin_scenario(std::string_view name) {
    using cooling::ThermalLoadKind;
    Scenario s;
    if (name == "nv-vacuum" || name == "nv-water") {
        s.species = {"NV", 1.0 / 12.0e-9, 721.0 * constants::nanometer, 2.65e24, 1.0, std::nullopt};
        s.env.diameter = 20e-6;
        s.env.interaction_length = 20e-6;
        s.env.emissivity = 1.0;
        s.env.ambient_T = 295.0;
        s.beam = {0.1, 760.0 * constants::nanometer, 5e-6};
        s.sigma_abs_source = "bundled:nv-absorption";
        s.sigma_se_source = "bundled:nv-emission";
        s.sweep.axes = {SweepAxis::Wavelength};
        s.sweep.wavelength_grid_nm = GridSpec{722.0, 800.0, 79};
        if (name == "nv-water") {
            s.env.load_kind = ThermalLoadKind::LiquidConvective;
            s.env.h_conv = 30.0;
            s.env.solvent = brownian::d2o_solvent();
        } else {
            s.env.load_kind = ThermalLoadKind::VacuumRadiative;
        }
    } else if (name == "siv-vacuum") {
        s.species = {"SiV", 1.0 / 1.2e-9, 741.0 * constants::nanometer, 2.65e23, 1.0,
                     spectra::bundled::siv_doublet()};
        s.env.diameter = 20e-6;
        s.env.interaction_length = 20e-6;
        s.env.emissivity = 1.0;
        s.env.ambient_T = 295.0;
        s.env.load_kind = ThermalLoadKind::VacuumRadiative;
        s.beam = {1e-4, 750.0 * constants::nanometer, 5e-6};
        s.sigma_abs_source = "bundled:siv-absorption";
        s.sigma_se_source = "bundled:siv-emission";
        s.sweep.axes = {SweepAxis::Wavelength};
        s.sweep.wavelength_grid_nm = GridSpec{742.0, 800.0, 117};
    } else {
        throw std::invalid_argument("unknown scenario '" + std::string(name) +
                                    "' (valid: nv-vacuum, nv-water, siv-vacuum)");
    }
    s.name = std::string(name);
    return s;
}

inline const std::vector<std::string>& builtin_scenario_names() {
    static const std::vector<std::string> n = {"nv-vacuum", "nv-water", "siv-vacuum"};
    return n;
}

// ------------------------------------------------- serialization & parsing

namespace detail_scenario {

inline void emit(std::ostream& out, const std::string& key, const std::string& value) {
    out << key << " = " << value << "\n";
}
inline void emit(std::ostream& out, const std::string& key, double value) {
    emit(out, key, detail::format_double(value));
}

}  // namespace detail_scenario

/// Canonical flat `section.key = value` form. Serialization is a fixed point
/// of serialize(parse(.)): every quantity is stored in the unit its key
/// names, and numbers print in shortest round-trip form.
inline std::string serialize_scenario(const Scenario& s) {
    using detail_scenario::emit;
    std::ostringstream out;
    emit(out, "scenario.name", s.name);
    emit(out, "species.name", s.species.name);
    emit(out, "species.gamma_rad_per_s", s.species.gamma_rad);
    emit(out, "species.lambda_F_m", s.species.lambda_F);
    emit(out, "species.number_density_per_m3", s.species.number_density);
    emit(out, "species.quantum_efficiency", s.species.quantum_efficiency);
    if (s.species.levels) {
        emit(out, "species.levels.deltaE_lower_J", s.species.levels->delta_e_lower);
        emit(out, "species.levels.deltaE_upper_J", s.species.levels->delta_e_upper);
        emit(out, "species.levels.d_lower", detail::format_int(s.species.levels->d_lower));
        emit(out, "species.levels.d_upper", detail::format_int(s.species.levels->d_upper));
        emit(out, "species.levels.lambda_ZL_m", s.species.levels->lambda_zl);
    }
    emit(out, "env.load_kind",
         s.env.load_kind == cooling::ThermalLoadKind::VacuumRadiative ? "vacuum_radiative"
                                                                      : "liquid_convective");
    emit(out, "env.diameter_m", s.env.diameter);
    emit(out, "env.interaction_length_m", s.env.interaction_length);
    emit(out, "env.emissivity", s.env.emissivity);
    emit(out, "env.ambient_T_K", s.env.ambient_T);
    if (s.env.load_kind == cooling::ThermalLoadKind::LiquidConvective)
        emit(out, "env.h_conv_W_m2K", s.env.h_conv);
    if (s.env.solvent) {
        emit(out, "env.solvent.name", s.env.solvent->name);
        emit(out, "env.solvent.eta_infinity_Pa_s", s.env.solvent->eta_infinity);
        emit(out, "env.solvent.A_K", s.env.solvent->A_vogel);
        emit(out, "env.solvent.T_VF_K", s.env.solvent->T_VF);
    }
    emit(out, "beam.power_W", s.beam.power);
    emit(out, "beam.wavelength_m", s.beam.wavelength);
    emit(out, "beam.spot_radius_m", s.beam.spot_radius);
    emit(out, "spectra.sigma_abs_source", s.sigma_abs_source);
    emit(out, "spectra.sigma_se_source", s.sigma_se_source);
    if (!s.sweep.axes.empty()) {
        std::string axes;
        for (SweepAxis a : s.sweep.axes) axes += (axes.empty() ? "" : ",") + std::string(axis_name(a));
        emit(out, "sweep.axes", axes);
        if (s.sweep.wavelength_grid_nm)
            emit(out, "sweep.wavelength_grid_nm", s.sweep.wavelength_grid_nm->to_string());
        if (s.sweep.power_grid_W) emit(out, "sweep.power_grid_W", s.sweep.power_grid_W->to_string());
        if (s.sweep.diameter_grid_m)
            emit(out, "sweep.diameter_grid_m", s.sweep.diameter_grid_m->to_string());
        if (s.sweep.qe_grid) emit(out, "sweep.qe_grid", s.sweep.qe_grid->to_string());
    }
    return out.str();
}

/// Assign one `section.key = value` field. Shared by the file parser and by
/// run overrides; unknown keys are an error naming the key.
inline void set_scenario_field(Scenario& s, std::string_view key, std::string_view value) {
    auto dval = [&] { return detail::parse_double(value, std::string(key)); };
    auto sval = [&] { return std::string(detail::trim(value)); };
    auto ensure_levels = [&]() -> spectra::DoubletStructure& {
        if (!s.species.levels) s.species.levels = spectra::DoubletStructure{0.0, 0.0, 1, 1, 0.0};
        return *s.species.levels;
    };
    auto ensure_solvent = [&]() -> brownian::SolventModel& {
        if (!s.env.solvent) s.env.solvent = brownian::SolventModel{"", 0.0, 0.0, 0.0};
        return *s.env.solvent;
    };

    if (key == "scenario.name") s.name = sval();
    else if (key == "species.name") s.species.name = sval();
    else if (key == "species.gamma_rad_per_s") s.species.gamma_rad = dval();
    else if (key == "species.lambda_F_m") s.species.lambda_F = dval();
    else if (key == "species.number_density_per_m3") s.species.number_density = dval();
    else if (key == "species.quantum_efficiency") s.species.quantum_efficiency = dval();
    else if (key == "species.levels.deltaE_lower_J") ensure_levels().delta_e_lower = dval();
    else if (key == "species.levels.deltaE_upper_J") ensure_levels().delta_e_upper = dval();
    else if (key == "species.levels.d_lower")
        ensure_levels().d_lower = static_cast<int>(detail::parse_int(value, std::string(key)));
    else if (key == "species.levels.d_upper")
        ensure_levels().d_upper = static_cast<int>(detail::parse_int(value, std::string(key)));
    else if (key == "species.levels.lambda_ZL_m") ensure_levels().lambda_zl = dval();
    else if (key == "env.load_kind") {
        std::string v = sval();
        if (v == "vacuum_radiative") s.env.load_kind = cooling::ThermalLoadKind::VacuumRadiative;
        else if (v == "liquid_convective") s.env.load_kind = cooling::ThermalLoadKind::LiquidConvective;
        else
            throw std::invalid_argument("env.load_kind must be vacuum_radiative or liquid_convective, got '" +
                                        v + "'");
    } else if (key == "env.diameter_m") {
        // keep L tied to D unless the scenario pins it independently
        bool tied = s.env.interaction_length == s.env.diameter;
        s.env.diameter = dval();
        if (tied) s.env.interaction_length = s.env.diameter;
    } else if (key == "env.interaction_length_m") s.env.interaction_length = dval();
    else if (key == "env.emissivity") s.env.emissivity = dval();
    else if (key == "env.ambient_T_K") s.env.ambient_T = dval();
    else if (key == "env.h_conv_W_m2K") s.env.h_conv = dval();
    else if (key == "env.solvent.name") ensure_solvent().name = sval();
    else if (key == "env.solvent.eta_infinity_Pa_s") ensure_solvent().eta_infinity = dval();
    else if (key == "env.solvent.A_K") ensure_solvent().A_vogel = dval();
    else if (key == "env.solvent.T_VF_K") ensure_solvent().T_VF = dval();
    else if (key == "beam.power_W") s.beam.power = dval();
    else if (key == "beam.wavelength_m") s.beam.wavelength = dval();
    else if (key == "beam.spot_radius_m") s.beam.spot_radius = dval();
    else if (key == "spectra.sigma_abs_source") s.sigma_abs_source = sval();
    else if (key == "spectra.sigma_se_source") s.sigma_se_source = sval();
    else if (key == "sweep.axes") {
        std::vector<SweepAxis> axes;
        std::string v = sval();
        std::size_t pos = 0;
        while (pos <= v.size() && !v.empty()) {
            std::size_t comma = v.find(',', pos);
            std::string_view tok = detail::trim(
                std::string_view(v).substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos));
            if (!tok.empty()) axes.push_back(axis_from_name(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        s.sweep.axes = std::move(axes);
    } else if (key == "sweep.wavelength_grid_nm") s.sweep.wavelength_grid_nm = GridSpec::parse(value);
    else if (key == "sweep.power_grid_W") s.sweep.power_grid_W = GridSpec::parse(value);
    else if (key == "sweep.diameter_grid_m") s.sweep.diameter_grid_m = GridSpec::parse(value);
    else if (key == "sweep.qe_grid") s.sweep.qe_grid = GridSpec::parse(value);
    else
        throw std::invalid_argument("unknown scenario key '" + std::string(key) + "'");
}

inline Scenario parse_scenario(std::istream& in, const std::string& source_name) {
    Scenario s;
    s.species = {"", 0.0, 0.0, 0.0, 1.0, std::nullopt};
    s.env = {};
    s.beam = {0.0, 0.0, 0.0};
    std::set<std::string> seen;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string_view::npos)
            throw std::runtime_error(source_name + ":" + detail::format_int(line_no) +
                                     ": expected 'section.key = value'");
        std::string key(detail::trim(t.substr(0, eq)));
        std::string_view value = detail::trim(t.substr(eq + 1));
        if (!seen.insert(key).second)
            throw std::runtime_error(source_name + ":" + detail::format_int(line_no) +
                                     ": duplicate key '" + key + "'");
        try {
            set_scenario_field(s, key, value);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(source_name + ":" + detail::format_int(line_no) + ": " + e.what());
        }
    }
    static const char* required[] = {
        "species.gamma_rad_per_s", "species.lambda_F_m", "species.number_density_per_m3",
        "env.load_kind", "env.diameter_m", "env.ambient_T_K",
        "beam.power_W", "beam.wavelength_m", "beam.spot_radius_m",
        "spectra.sigma_abs_source", "spectra.sigma_se_source"};
    std::string missing;
    for (const char* k : required)
        if (!seen.count(k)) missing += (missing.empty() ? "" : ", ") + std::string(k);
    if (!missing.empty())
        throw std::runtime_error(source_name + ": missing required keys: " + missing);
    if (!seen.count("env.interaction_length_m")) s.env.interaction_length = s.env.diameter;
    if (!seen.count("env.emissivity")) s.env.emissivity = 1.0;
    return s;
}

/// Builtin name, or a scenario file (searched on $CRYOCOOL_DATA_PATH).
inline Scenario resolve_scenario(const std::string& ref) {
    for (const auto& n : builtin_scenario_names())
        if (ref == n) return builtin_scenario(ref);
    if (auto path = find_data_file(ref)) {
        std::ifstream in(*path);
        if (!in) throw std::runtime_error("cannot open scenario file '" + *path + "'");
        return parse_scenario(in, *path);
    }
    std::string valid;
    for (const auto& n : builtin_scenario_names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("'" + ref + "' is neither a builtin scenario (" + valid +
                                ") nor a scenario file");
}

// ------------------------------------------------------------- sweep driver

struct RunOptions {
    int threads = 1;
};

struct RunOutput {
    OutputTable table;
    std::string summary;
    std::size_t total_rows = 0;
    std::size_t valid_rows = 0;
};

/// Apply overrides, resolve the spectra, and evaluate the sweep grid into a
/// deterministic table: identical inputs give byte-identical output, rows in
/// grid order with the wavelength axis innermost, independent of threading.
inline RunOutput run_scenario(const Scenario& scenario,
                              const std::vector<std::pair<std::string, std::string>>& overrides = {},
                              const RunOptions& options = {}) {
    Scenario s = scenario;
    for (const auto& [key, value] : overrides) set_scenario_field(s, key, value);
    s.validate();

    spectra::Spectrum sigma_abs = spectra::bundled::resolve_spectrum_source(s.sigma_abs_source);
    spectra::Spectrum sigma_se = spectra::bundled::resolve_spectrum_source(s.sigma_se_source);
    if (sigma_abs.kind() != spectra::SpectrumKind::CrossSection ||
        sigma_se.kind() != spectra::SpectrumKind::CrossSection)
        throw std::invalid_argument("scenario '" + s.name +
                                    "': sigma_abs/sigma_se sources must be cross-section spectra");

    // evaluation order: listed axes, wavelength innermost
    std::vector<SweepAxis> axes = s.sweep.axes;
    std::stable_partition(axes.begin(), axes.end(),
                          [](SweepAxis a) { return a != SweepAxis::Wavelength; });
    std::vector<std::vector<double>> grids;
    std::size_t total = 1;
    for (SweepAxis a : axes) {
        grids.push_back(s.sweep.grid_for(a)->values());
        total *= grids.back().size();
    }
    if (total == 0) throw std::invalid_argument("sweep: empty grid");
    if (total > 5'000'000) throw std::invalid_argument("sweep: more than 5e6 grid points");

    bool with_chi =
        s.env.load_kind == cooling::ThermalLoadKind::LiquidConvective && s.env.solvent.has_value();

    struct Row {
        std::vector<double> axis_values;
        cooling::SweepRow sweep;
        double chi = std::numeric_limits<double>::quiet_NaN();
        bool chi_failed = false;
    };
    std::vector<Row> rows(total);

    auto eval_row = [&](std::size_t index) {
        Row& row = rows[index];
        // decompose row-major, last axis fastest
        std::size_t rest = index;
        row.axis_values.resize(axes.size());
        for (std::size_t a = axes.size(); a-- > 0;) {
            row.axis_values[a] = grids[a][rest % grids[a].size()];
            rest /= grids[a].size();
        }
        cooling::DefectSpecies species = s.species;
        cooling::ParticleEnvironment env = s.env;
        cooling::BeamParams beam = s.beam;
        bool tie_length = s.env.interaction_length == s.env.diameter;
        for (std::size_t a = 0; a < axes.size(); ++a) {
            double v = row.axis_values[a];
            switch (axes[a]) {
                case SweepAxis::Wavelength: beam.wavelength = v * constants::nanometer; break;
                case SweepAxis::Power: beam.power = v; break;
                case SweepAxis::Diameter:
                    env.diameter = v;
                    if (tie_length) env.interaction_length = v;
                    break;
                case SweepAxis::QuantumEfficiency: species.quantum_efficiency = v; break;
            }
        }
        cooling::SweepRow& out = row.sweep;
        out.wavelength = beam.wavelength;
        out.sigma_abs = sigma_abs.interpolate(beam.wavelength);
        out.sigma_se = sigma_se.interpolate(beam.wavelength);
        try {
            out.result = cooling::evaluate(species, beam, env, out.sigma_abs, out.sigma_se);
            if (std::abs(out.result->delta_T) > 0.2 * env.ambient_T)
                out.flags |= cooling::warn_linearization;
        } catch (const std::domain_error& e) {
            out.result.reset();
            out.note = e.what();
        }
        if (with_chi && out.result) {
            try {
                row.chi = brownian::diffusion_ratio(env.ambient_T, out.result->delta_T, *s.env.solvent);
                if (brownian::expansion_suspect(env.ambient_T, out.result->delta_T, *s.env.solvent))
                    out.flags |= cooling::warn_expansion;
            } catch (const std::domain_error&) {
                row.chi_failed = true;
            }
        }
    };

    int threads = std::max(options.threads, 1);
    if (threads <= 1 || total < 2) {
        for (std::size_t i = 0; i < total; ++i) eval_row(i);
    } else {
        std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(threads), total);
        std::vector<std::thread> workers;
        std::vector<std::exception_ptr> errors(n_workers);
        for (std::size_t t = 0; t < n_workers; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < total; i += n_workers) eval_row(i);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& w : workers) w.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    // assemble the table
    RunOutput out;
    OutputTable& table = out.table;
    table.header.push_back(std::string("cryocool ") + version);
    {
        std::istringstream lines(serialize_scenario(s));
        std::string l;
        while (std::getline(lines, l)) table.header.push_back(l);
    }
    if (s.sigma_abs_source.rfind("bundled:", 0) == 0 || s.sigma_se_source.rfind("bundled:", 0) == 0)
        table.header.push_back("note = bundled spectra are parametric reconstructions");

    for (SweepAxis a : axes) {
        if (a == SweepAxis::Wavelength) continue;
        if (a == SweepAxis::Power) table.columns.push_back("power_W");
        if (a == SweepAxis::Diameter) table.columns.push_back("diameter_m");
        if (a == SweepAxis::QuantumEfficiency) table.columns.push_back("quantum_efficiency");
    }
    table.columns.insert(table.columns.end(),
                         {"lambda_nm", "sigma_abs_m2", "sigma_se_m2", "I_S_W_m2", "P_cool_W",
                          "delta_T_K"});
    if (with_chi) table.columns.push_back("chi");
    table.columns.push_back("warn_flags");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    double best_delta_T = nan;
    std::size_t best_index = total;
    std::string first_note;
    for (std::size_t i = 0; i < total; ++i) {
        const Row& row = rows[i];
        std::vector<std::string> cells;
        for (std::size_t a = 0; a < axes.size(); ++a)
            if (axes[a] != SweepAxis::Wavelength)
                cells.push_back(detail::format_double_sci(row.axis_values[a]));
        cells.push_back(detail::format_double_sci(row.sweep.wavelength / constants::nanometer));
        cells.push_back(detail::format_double_sci(row.sweep.sigma_abs));
        cells.push_back(detail::format_double_sci(row.sweep.sigma_se));
        if (row.sweep.result) {
            const auto& r = *row.sweep.result;
            cells.push_back(detail::format_double_sci(r.saturation_intensity));
            cells.push_back(detail::format_double_sci(r.cooling_power));
            cells.push_back(detail::format_double_sci(r.delta_T));
            if (with_chi) cells.push_back(detail::format_double_sci(row.chi));
            std::string flags;
            if (row.sweep.flags & cooling::warn_linearization) flags = "linearization";
            if (row.sweep.flags & cooling::warn_expansion)
                flags += (flags.empty() ? "" : "+") + std::string("expansion");
            if (row.chi_failed) flags += (flags.empty() ? "" : "+") + std::string("domain");
            cells.push_back(flags.empty() ? "none" : flags);
            ++out.valid_rows;
            if (best_index == total || r.delta_T < best_delta_T) {
                best_delta_T = r.delta_T;
                best_index = i;
            }
        } else {
            for (int k = 0; k < (with_chi ? 4 : 3); ++k) cells.push_back("nan");
            cells.push_back("domain");
            if (first_note.empty()) first_note = row.sweep.note;
        }
        table.rows.push_back(std::move(cells));
    }
    out.total_rows = total;

    if (best_index < total) {
        std::string at = "lambda = " +
                         detail::format_double_msg(rows[best_index].sweep.wavelength / constants::nanometer) +
                         " nm";
        for (std::size_t a = 0; a < axes.size(); ++a) {
            if (axes[a] == SweepAxis::Wavelength) continue;
            at += std::string(", ") + axis_name(axes[a]) + " = " +
                  detail::format_double_msg(rows[best_index].axis_values[a]);
        }
        out.summary = "min delta_T = " + detail::format_double_msg(best_delta_T) + " K at " + at;
    } else {
        out.summary = "no valid rows (" + first_note + ")";
    }
    return out;
}

}  // namespace cryocool::scenarios

#endif
