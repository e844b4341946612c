#ifndef CRYOCOOL_BUNDLED_HPP_
#define CRYOCOOL_BUNDLED_HPP_

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "cryocool/constants.hpp"
#include "cryocool/datapath.hpp"
#include "cryocool/fuechtbauer_ladenburg.hpp"
#include "cryocool/mccumber.hpp"
#include "cryocool/nv_absorption.hpp"
#include "cryocool/spectrum.hpp"
#include "cryocool/spectrum_io.hpp"

// Bundled spectra. The published NV/SiV spectra exist only as plots, so the
// library ships deterministic parametric reconstructions calibrated to the
// reported summary numbers (mean emission wavelengths, the 532 nm absorption
// value, peak cross-section scales). Any of them can be replaced by a
// measured data file in the spectrum file format.
namespace cryocool::spectra::bundled {

namespace detail_bundled {

inline double gaussian_area(double x, double mu, double s) {
    double z = (x - mu) / s;
    return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * constants::pi));
}

inline double lorentzian_area(double x, double mu, double hwhm) {
    double d = x - mu;
    return (hwhm / constants::pi) / (d * d + hwhm * hwhm);
}

}  // namespace detail_bundled

/// SiV ground/excited doublet constants: 0.2 meV / 1.05 meV splittings,
/// two levels each, 738 nm zero-phonon line.
inline DoubletStructure siv_doublet(double lambda_zl_m = 738.0 * constants::nanometer) {
    return DoubletStructure::from_ev(0.2e-3, 1.05e-3, 2, 2, lambda_zl_m);
}

/// NV- emission cross section, 500-880 nm at 1 nm: 637 nm zero-phonon line
/// plus a Gaussian phonon-sideband mixture with mean emission wavelength
/// 721 nm, scaled to a 3e-21 m^2 peak.
inline const Spectrum& nv_emission() {
    static const Spectrum s = [] {
        struct Component { double mu, sigma, weight; };
        // sideband weights tuned so the grid-trapezoid mean lands on 721 nm
        static constexpr Component comps[] = {
            {637.0, 2.0, 0.030},
            {659.0, 9.0, 0.100},
            {683.0, 14.0, 0.19750954460094333},
            {710.0, 20.0, 0.240},
            {742.0, 26.0, 0.220},
            {780.0, 34.0, 0.1424904553990567},
            {825.0, 45.0, 0.070},
        };
        std::vector<double> w, v;
        double peak = 0.0;
        for (int i = 0; i <= 380; ++i) {
            double nm = 500.0 + static_cast<double>(i);
            double val = 0.0;
            for (const auto& c : comps) val += c.weight * detail_bundled::gaussian_area(nm, c.mu, c.sigma);
            w.push_back(nm * constants::nanometer);
            v.push_back(val);
            if (val > peak) peak = val;
        }
        for (auto& val : v) val *= 3.0e-21 / peak;
        return Spectrum(std::move(w), std::move(v), SpectrumKind::CrossSection);
    }();
    return s;
}

/// NV- absorption cross section: the piecewise table/quartic model sampled
/// at 0.5 nm over 500-850 nm.
inline const Spectrum& nv_absorption() {
    static const Spectrum s = NvAbsorptionModel().sample();
    return s;
}

/// SiV- photoluminescence, 690-845 nm at 0.25 nm: Lorentzian 738 nm
/// zero-phonon line (2.4 nm half width) plus a weak Gaussian sideband,
/// weighted so the mean emission wavelength is 741 nm. Arbitrary units,
/// peak 1000.
inline const Spectrum& siv_photoluminescence() {
    static const Spectrum s = [] {
        constexpr double sideband_weight = 0.08489399315288287;
        std::vector<double> w, v;
        double peak = 0.0;
        for (int i = 0; i <= 620; ++i) {
            double nm = 690.0 + 0.25 * static_cast<double>(i);
            double val = (1.0 - sideband_weight) * detail_bundled::lorentzian_area(nm, 738.0, 2.4) +
                         sideband_weight * detail_bundled::gaussian_area(nm, 766.0, 13.0);
            w.push_back(nm * constants::nanometer);
            v.push_back(val);
            if (val > peak) peak = val;
        }
        for (auto& val : v) val *= 1000.0 / peak;
        return Spectrum(std::move(w), std::move(v), SpectrumKind::Intensity);
    }();
    return s;
}

/// SiV- emission cross section derived from the bundled photoluminescence
/// with tau_rad = 1.2 ns and n = 2.4.
inline const Spectrum& siv_emission() {
    static const Spectrum s = fl_emission_cross_section(siv_photoluminescence(), 1.2e-9, 2.4);
    return s;
}

/// SiV- absorption cross section via reciprocity at 295 K.
inline const Spectrum& siv_absorption() {
    static const Spectrum s = absorption_from_emission(siv_emission(), 295.0, siv_doublet());
    return s;
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"nv-emission", "nv-absorption", "siv-pl",
                                               "siv-emission", "siv-absorption"};
    return n;
}

inline const Spectrum& by_name(std::string_view name) {
    if (name == "nv-emission") return nv_emission();
    if (name == "nv-absorption") return nv_absorption();
    if (name == "siv-pl") return siv_photoluminescence();
    if (name == "siv-emission") return siv_emission();
    if (name == "siv-absorption") return siv_absorption();
    std::string valid;
    for (const auto& n : names()) valid += (valid.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown bundled spectrum '" + std::string(name) +
                                "' (valid: " + valid + ")");
}

/// Resolve "bundled:<name>" to a bundled spectrum, otherwise treat the
/// source as a file path, searched first as given and then under each
/// colon-separated directory in $CRYOCOOL_DATA_PATH.
inline Spectrum resolve_spectrum_source(const std::string& source) {
    if (source.rfind("bundled:", 0) == 0) return by_name(source.substr(8));
    if (auto path = find_data_file(source)) return load_spectrum_file(*path);
    throw std::runtime_error("cannot resolve spectrum source '" + source +
                             "' (not a bundled: name, not a file, not on CRYOCOOL_DATA_PATH)");
}

}  // namespace cryocool::spectra::bundled

#endif
