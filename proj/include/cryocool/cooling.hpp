#ifndef CRYOCOOL_COOLING_HPP_
#define CRYOCOOL_COOLING_HPP_

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cryocool/brownian.hpp"
#include "cryocool/constants.hpp"
#include "cryocool/mccumber.hpp"
#include "cryocool/spectrum.hpp"

// Two-level anti-Stokes refrigeration model: saturation intensity, effective
// mean emission wavelength under non-radiative heating, cooling power, and
// the equilibrium temperature change against a radiative or convective load.
namespace cryocool::cooling {

/// Photophysical constants of a dopant ensemble.
struct DefectSpecies {
    std::string name;
    double gamma_rad;           // s^-1, radiative decay rate
    double lambda_F;            // m, mean fluorescence emission wavelength
    double number_density;      // m^-3
    double quantum_efficiency = 1.0;  // in (0, 1]; <= 0.5 is representable but cannot cool
    std::optional<spectra::DoubletStructure> levels;

    void validate() const {
        if (!(gamma_rad > 0.0))
            throw std::invalid_argument("species '" + name + "': gamma_rad must be > 0");
        if (!(lambda_F > 0.0))
            throw std::invalid_argument("species '" + name + "': lambda_F must be > 0");
        if (!(number_density > 0.0))
            throw std::invalid_argument("species '" + name + "': number density must be > 0");
        if (!(quantum_efficiency > 0.0) || quantum_efficiency > 1.0)
            throw std::invalid_argument("species '" + name + "': quantum efficiency must be in (0, 1]");
        if (levels) levels->validate();
    }
};

struct BeamParams {
    double power;        // W
    double wavelength;   // m
    double spot_radius;  // m

    double effective_area() const { return constants::pi * spot_radius * spot_radius; }

    void validate() const {
        if (!(power > 0.0) || !(wavelength > 0.0) || !(spot_radius > 0.0))
            throw std::invalid_argument("beam: power, wavelength and spot radius must be > 0");
    }
};

enum class ThermalLoadKind { VacuumRadiative, LiquidConvective };

/// Crystal geometry plus the thermal surroundings. The beam traverses an
/// interaction length L through the particle; L defaults to the diameter
/// (central beam through a sphere) and is overridable for off-center beams.
struct ParticleEnvironment {
    double diameter;            // m
    double interaction_length;  // m
    double emissivity = 1.0;    // in (0, 1]
    double ambient_T;           // K
    ThermalLoadKind load_kind = ThermalLoadKind::VacuumRadiative;
    double h_conv = 0.0;        // W m^-2 K^-1, LiquidConvective only
    std::optional<brownian::SolventModel> solvent;

    void validate() const {
        if (!(diameter > 0.0))
            throw std::invalid_argument("environment: diameter must be > 0");
        if (!(interaction_length > 0.0))
            throw std::invalid_argument("environment: interaction length must be > 0");
        if (!(emissivity > 0.0) || emissivity > 1.0)
            throw std::invalid_argument("environment: emissivity must be in (0, 1]");
        if (!(ambient_T > 0.0))
            throw std::invalid_argument("environment: ambient temperature must be > 0");
        if (load_kind == ThermalLoadKind::LiquidConvective && !(h_conv > 0.0))
            throw std::invalid_argument("environment: convective load needs h_conv > 0");
        if (solvent) solvent->validate();
    }

    /// Thermal load per unit surface area and kelvin: 4 eps sigma_B T^3 for
    /// the radiative exchange, plus h_conv in liquid.
    double load_coefficient() const {
        double radiative = 4.0 * emissivity * constants::stefan_boltzmann * ambient_T * ambient_T * ambient_T;
        return load_kind == ThermalLoadKind::LiquidConvective ? radiative + h_conv : radiative;
    }
};

struct CoolingResult {
    double saturation_intensity;  // W m^-2
    double cooling_power;         // W, positive = heat extracted
    double delta_T;               // K, equilibrium particle minus ambient
    double lambda_F_star;         // m
};

/// I_S = hc gamma_rad / (lambda sigma_abs).
inline double saturation_intensity(double lambda, double sigma_abs, double gamma_rad) {
    if (!(lambda > 0.0)) throw std::invalid_argument("saturation intensity: wavelength must be > 0");
    if (!(gamma_rad > 0.0)) throw std::invalid_argument("saturation intensity: gamma_rad must be > 0");
    if (!(sigma_abs > 0.0))
        throw std::domain_error("saturation intensity: no absorption at this wavelength (sigma_abs = 0)");
    return constants::hc * gamma_rad / (lambda * sigma_abs);
}

/// Worst-case heating assumption (every non-radiative decay deposits a pump
/// quantum of heat): lambda_F* = lambda_F eta / (2 eta - 1). Diverges at
/// eta = 1/2, below which no cooling is possible.
inline double effective_mean_wavelength(double lambda_F, double quantum_efficiency) {
    if (!(lambda_F > 0.0))
        throw std::invalid_argument("effective mean wavelength: lambda_F must be > 0");
    if (!(quantum_efficiency > 0.5) || quantum_efficiency > 1.0)
        throw std::domain_error(
            "effective mean wavelength: quantum efficiency " +
            detail::format_double_msg(quantum_efficiency) +
            " outside (0.5, 1]; under worst-case non-radiative heating no cooling is possible");
    return lambda_F * quantum_efficiency / (2.0 * quantum_efficiency - 1.0);
}

/// General heating form: lambda_F* = [1/lambda_F - kappa/(hc gamma_rad)]^-1
/// for a per-defect parasitic heating power kappa.
inline double effective_mean_wavelength_from_kappa(double lambda_F, double kappa, double gamma_rad) {
    if (!(lambda_F > 0.0))
        throw std::invalid_argument("effective mean wavelength: lambda_F must be > 0");
    if (!(gamma_rad > 0.0))
        throw std::invalid_argument("effective mean wavelength: gamma_rad must be > 0");
    if (kappa < 0.0)
        throw std::domain_error("effective mean wavelength: kappa must be >= 0");
    double pole = constants::hc * gamma_rad / lambda_F;
    if (kappa >= pole)
        throw std::domain_error("effective mean wavelength: kappa = " + detail::format_double_msg(kappa) +
                                " W at or beyond the divergence at " + detail::format_double_msg(pole) + " W");
    return 1.0 / (1.0 / lambda_F - kappa / (constants::hc * gamma_rad));
}

namespace detail_cooling {

// 1 + sigma_se/sigma_abs + alpha I_S / P, shared by the power and delta-T
// expressions
inline double saturation_denominator(double sigma_abs, double sigma_se, double alpha_eff,
                                     double sat_intensity, double power) {
    return 1.0 + sigma_se / sigma_abs + alpha_eff * sat_intensity / power;
}

inline void check_sigmas(double sigma_abs, double sigma_se) {
    if (!(sigma_abs > 0.0))
        throw std::domain_error("cooling model: no absorption at this wavelength (sigma_abs = 0)");
    if (sigma_se < 0.0) throw std::invalid_argument("cooling model: sigma_se must be >= 0");
}

}  // namespace detail_cooling

/// Net optical cooling power extracted from the crystal,
///   P_cool = N L alpha I_S sigma_abs (lambda/lambda_F* - 1) / denom.
/// Positive exactly when the pump is redder than lambda_F*.
inline double cooling_power(const DefectSpecies& species, const BeamParams& beam,
                            const ParticleEnvironment& env, double sigma_abs, double sigma_se) {
    species.validate();
    beam.validate();
    env.validate();
    detail_cooling::check_sigmas(sigma_abs, sigma_se);
    double lambda_f_star = effective_mean_wavelength(species.lambda_F, species.quantum_efficiency);
    double sat = saturation_intensity(beam.wavelength, sigma_abs, species.gamma_rad);
    double alpha = beam.effective_area();
    double denom = detail_cooling::saturation_denominator(sigma_abs, sigma_se, alpha, sat, beam.power);
    return species.number_density * env.interaction_length * alpha * sat * sigma_abs *
           (beam.wavelength / lambda_f_star - 1.0) / denom;
}

/// Equilibrium temperature change of the particle,
///   dT = N alpha I_S sigma_abs (1 - lambda/lambda_F*) (L/D)
///        / (pi D (4 eps sigma_B T^3 [+ h_conv]) denom),
/// i.e. the optical power balanced against the blackbody (plus convective)
/// load over the sphere surface pi D^2. With L = D this is the closed-form
/// linearized-load expression; note the load linearization assumes |dT|
/// small against T_amb.
inline double equilibrium_delta_T(const DefectSpecies& species, const BeamParams& beam,
                                  const ParticleEnvironment& env, double sigma_abs, double sigma_se) {
    species.validate();
    beam.validate();
    env.validate();
    detail_cooling::check_sigmas(sigma_abs, sigma_se);
    double lambda_f_star = effective_mean_wavelength(species.lambda_F, species.quantum_efficiency);
    double sat = saturation_intensity(beam.wavelength, sigma_abs, species.gamma_rad);
    double alpha = beam.effective_area();
    double denom = detail_cooling::saturation_denominator(sigma_abs, sigma_se, alpha, sat, beam.power);
    double length_ratio = env.interaction_length / env.diameter;
    return species.number_density * alpha * sat * sigma_abs *
           (1.0 - beam.wavelength / lambda_f_star) * length_ratio /
           (constants::pi * env.diameter * env.load_coefficient() * denom);
}

/// All model outputs for one operating point.
inline CoolingResult evaluate(const DefectSpecies& species, const BeamParams& beam,
                              const ParticleEnvironment& env, double sigma_abs, double sigma_se) {
    CoolingResult r{};
    r.lambda_F_star = effective_mean_wavelength(species.lambda_F, species.quantum_efficiency);
    r.saturation_intensity = saturation_intensity(beam.wavelength, sigma_abs, species.gamma_rad);
    r.cooling_power = cooling_power(species, beam, env, sigma_abs, sigma_se);
    r.delta_T = equilibrium_delta_T(species, beam, env, sigma_abs, sigma_se);
    return r;
}

// warning flags attached to sweep rows
enum WarnFlag : unsigned {
    warn_none = 0,
    warn_linearization = 1u << 0,  // |dT| > 0.2 T_amb: linearized load suspect
    warn_expansion = 1u << 1,      // CBM viscosity expansion outside its comfort zone
};

struct SweepRow {
    double wavelength = 0.0;
    double sigma_abs = 0.0;
    double sigma_se = 0.0;
    std::optional<CoolingResult> result;  // empty: model-domain failure, see note
    unsigned flags = warn_none;
    std::string note;
};

/// Evaluate the model across a wavelength grid. Rows where the model's
/// domain rules fail (e.g. quantum efficiency at or below 1/2) are marked
/// rather than aborting the sweep. Rows are assembled in grid order
/// regardless of the number of worker threads.
inline std::vector<SweepRow> sweep_delta_T(const DefectSpecies& species,
                                           const ParticleEnvironment& env, double power,
                                           double spot_radius, const spectra::Spectrum& sigma_abs,
                                           const spectra::Spectrum& sigma_se,
                                           std::span<const double> lambda_grid, int threads = 1) {
    if (lambda_grid.empty()) throw std::invalid_argument("sweep: empty wavelength grid");
    species.validate();
    env.validate();
    for (double lambda : lambda_grid)
        if (!sigma_abs.contains(lambda) || !sigma_se.contains(lambda))
            throw std::out_of_range("sweep: wavelength " +
                                    detail::format_double_msg(lambda / constants::nanometer) +
                                    " nm outside the sampled spectra");

    std::vector<SweepRow> rows(lambda_grid.size());
    auto eval_row = [&](std::size_t i) {
        SweepRow& row = rows[i];
        row.wavelength = lambda_grid[i];
        row.sigma_abs = sigma_abs.interpolate(row.wavelength);
        row.sigma_se = sigma_se.interpolate(row.wavelength);
        BeamParams beam{power, row.wavelength, spot_radius};
        try {
            row.result = evaluate(species, beam, env, row.sigma_abs, row.sigma_se);
            if (std::abs(row.result->delta_T) > 0.2 * env.ambient_T)
                row.flags |= warn_linearization;
        } catch (const std::domain_error& e) {
            row.result.reset();
            row.note = e.what();
        }
    };

    if (threads <= 1 || lambda_grid.size() < 2) {
        for (std::size_t i = 0; i < rows.size(); ++i) eval_row(i);
        return rows;
    }

    std::size_t n_workers = std::min<std::size_t>(static_cast<std::size_t>(threads), rows.size());
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(n_workers);
    for (std::size_t t = 0; t < n_workers; ++t) {
        workers.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < rows.size(); i += n_workers) eval_row(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

}  // namespace cryocool::cooling

#endif
