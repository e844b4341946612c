#ifndef CRYOCOOL_BROWNIAN_HPP_
#define CRYOCOOL_BROWNIAN_HPP_

#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cryocool/constants.hpp"
#include "cryocool/format.hpp"

// Hot/cold Brownian motion of a trapped particle whose surface temperature
// differs from the ambient liquid: effective temperature, modified viscosity
// and drag, and the calibration-free diffusion-constant ratio chi.
namespace cryocool::brownian {

/// Vogel-Fulcher viscosity model eta(T) = eta_inf * exp[A / (T - T_VF)].
struct SolventModel {
    std::string name;
    double eta_infinity;  // Pa s
    double A_vogel;       // K
    double T_VF;          // K

    void validate() const {
        if (!(eta_infinity > 0.0) || !(A_vogel > 0.0) || !(T_VF > 0.0))
            throw std::invalid_argument("solvent model '" + name + "': parameters must be > 0");
    }
};

/// D2O Vogel-Fulcher parameters (source data for this model).
inline SolventModel d2o_solvent() { return {"D2O", 3.456e-5, 478.7, 160.0}; }

/// H2O parameters from a generic handbook Vogel-Fulcher fit.
inline SolventModel h2o_solvent() { return {"H2O", 2.414e-5, 570.58, 140.0}; }

inline SolventModel builtin_solvent(std::string_view name) {
    if (name == "D2O" || name == "d2o") return d2o_solvent();
    if (name == "H2O" || name == "h2o") return h2o_solvent();
    throw std::invalid_argument("unknown builtin solvent '" + std::string(name) +
                                "' (valid: D2O, H2O)");
}

struct BrownianState {
    double ambient_T;        // K
    double delta_T;          // K, particle minus ambient
    double particle_radius;  // m

    void validate(const SolventModel& solvent) const {
        if (!(ambient_T > solvent.T_VF))
            throw std::invalid_argument("brownian state: ambient temperature must exceed the solvent T_VF");
        if (!(ambient_T + delta_T > 0.0))
            throw std::invalid_argument("brownian state: particle temperature must be > 0");
        if (!(particle_radius > 0.0))
            throw std::invalid_argument("brownian state: particle radius must be > 0");
    }
};

inline double solvent_viscosity(double T, const SolventModel& solvent) {
    solvent.validate();
    if (!(T > solvent.T_VF))
        throw std::domain_error("solvent viscosity: T = " + detail::format_double_msg(T) +
                                " K is not above T_VF = " + detail::format_double_msg(solvent.T_VF) + " K");
    return solvent.eta_infinity * std::exp(solvent.A_vogel / (T - solvent.T_VF));
}

/// Effective temperature governing the diffusion of the out-of-equilibrium
/// particle: T_amb + 5 dT / 12.
inline double cbm_temperature(double ambient_T, double delta_T) {
    double t = ambient_T + 5.0 * delta_T / 12.0;
    if (!(t > 0.0))
        throw std::domain_error("cbm temperature: nonpositive effective temperature " +
                                detail::format_double_msg(t) + " K");
    return t;
}

/// eta_0 / eta_CBM as the quadratic expansion in dT/(T_amb - T_VF) with
/// coefficients 193/486, 56/243 and 12563/118098 of ln(eta_0/eta_inf).
inline double cbm_viscosity_ratio(double ambient_T, double delta_T, const SolventModel& solvent) {
    solvent.validate();
    if (!(ambient_T > solvent.T_VF))
        throw std::domain_error("cbm viscosity: ambient temperature must exceed the solvent T_VF");
    double log_ratio = solvent.A_vogel / (ambient_T - solvent.T_VF);  // ln(eta_0/eta_inf)
    double x = delta_T / (ambient_T - solvent.T_VF);
    double ratio = 1.0 + (193.0 / 486.0) * log_ratio * x -
                   ((56.0 / 243.0) * log_ratio - (12563.0 / 118098.0) * log_ratio * log_ratio) * x * x;
    if (!(ratio > 0.0))
        throw std::domain_error(
            "cbm viscosity: expansion gives nonpositive eta_0/eta_CBM = " +
            detail::format_double_msg(ratio) + " (delta_T far outside its validity)");
    return ratio;
}

inline double cbm_viscosity(double ambient_T, double delta_T, const SolventModel& solvent) {
    return solvent_viscosity(ambient_T, solvent) / cbm_viscosity_ratio(ambient_T, delta_T, solvent);
}

/// Stokes drag 6 pi R eta at the modified viscosity.
inline double cbm_drag(const BrownianState& state, const SolventModel& solvent) {
    state.validate(solvent);
    return 6.0 * constants::pi * state.particle_radius *
           cbm_viscosity(state.ambient_T, state.delta_T, solvent);
}

/// chi = D_CBM / D_amb = (T_CBM / T_amb) * (eta_0 / eta_CBM). The Stokes
/// 6 pi R factor cancels, so chi never sees the particle radius.
inline double diffusion_ratio(double ambient_T, double delta_T, const SolventModel& solvent) {
    return (cbm_temperature(ambient_T, delta_T) / ambient_T) *
           cbm_viscosity_ratio(ambient_T, delta_T, solvent);
}

/// The quadratic truncation is suspect past |dT/(T_amb - T_VF)| = 0.3;
/// callers attach a warning flag when this trips.
inline bool expansion_suspect(double ambient_T, double delta_T, const SolventModel& solvent) {
    return std::abs(delta_T / (ambient_T - solvent.T_VF)) > 0.3;
}

/// Solvent list file: lines of `name, eta_infinity_Pa_s, A_K, T_VF_K`,
/// '#' comments allowed. Parse errors carry line numbers.
inline std::vector<SolventModel> parse_solvent_models(std::istream& in, const std::string& source_name) {
    std::vector<SolventModel> out;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = detail::trim(line);
        if (s.empty() || s.front() == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw std::runtime_error(source_name + ":" + detail::format_int(line_no) + ": " + msg);
        };
        std::vector<std::string_view> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = s.find(',', pos);
            fields.push_back(detail::trim(s.substr(pos, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - pos)));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        if (fields.size() != 4) fail("expected 'name, eta_infinity_Pa_s, A_K, T_VF_K'");
        SolventModel m;
        m.name = std::string(fields[0]);
        try {
            m.eta_infinity = detail::parse_double(fields[1], "eta_infinity_Pa_s");
            m.A_vogel = detail::parse_double(fields[2], "A_K");
            m.T_VF = detail::parse_double(fields[3], "T_VF_K");
            m.validate();
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<SolventModel> load_solvent_models(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open solvent file '" + path + "'");
    return parse_solvent_models(in, path);
}

}  // namespace cryocool::brownian

#endif
