#ifndef CRYOCOOL_CALIBRATION_HPP_
#define CRYOCOOL_CALIBRATION_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cryocool/spectrum.hpp"

namespace cryocool::spectra {

/// Anchor for turning a relative emission-signal scan into an absolute
/// absorption cross section: the cross section at ref_wavelength is known,
/// the reference point was excited at ref_power and every other point at
/// measurement_power.
struct CalibrationAnchor {
    double ref_wavelength;      // m
    double ref_cross_section;   // m^2
    double ref_power;           // W
    double measurement_power;   // W

    void validate() const {
        if (!(ref_wavelength > 0.0) || !(ref_cross_section > 0.0) || !(ref_power > 0.0) ||
            !(measurement_power > 0.0))
            throw std::invalid_argument("calibration anchor: all fields must be > 0");
    }
};

/// Divide each sample by its excitation power (the anchor grid point by
/// ref_power, everything else by measurement_power), then scale linearly so
/// the anchor wavelength maps to ref_cross_section. When the anchor falls
/// between grid points no sample gets the ref_power correction and the scale
/// comes from the interpolated corrected signal.
inline Spectrum calibrate_absorption(const Spectrum& relative_signal, const CalibrationAnchor& anchor) {
    anchor.validate();
    if (!relative_signal.contains(anchor.ref_wavelength))
        throw std::out_of_range("calibration: anchor wavelength outside the signal's sampled interval");

    const auto& w = relative_signal.wavelengths();
    const auto& v = relative_signal.values();

    // grid-point match up to 1e-9 relative; real scans are orders of
    // magnitude coarser than that
    std::size_t anchor_idx = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (std::abs(w[i] - anchor.ref_wavelength) <= 1e-9 * anchor.ref_wavelength) {
            anchor_idx = i;
            break;
        }
    }

    std::vector<double> corrected(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        corrected[i] = v[i] / (i == anchor_idx ? anchor.ref_power : anchor.measurement_power);

    Spectrum corrected_spectrum(w, corrected, SpectrumKind::Intensity);
    double anchor_value = (anchor_idx < w.size()) ? corrected[anchor_idx]
                                                  : corrected_spectrum.interpolate(anchor.ref_wavelength);
    if (!(anchor_value > 0.0))
        throw std::domain_error("calibration: zero signal at the anchor wavelength");

    // (c/anchor)*ref keeps the anchor sample exactly at ref_cross_section
    return corrected_spectrum.map(
        [&](double, double c) { return (c / anchor_value) * anchor.ref_cross_section; },
        SpectrumKind::CrossSection);
}

}  // namespace cryocool::spectra

#endif
