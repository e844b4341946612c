#ifndef CRYOCOOL_FUECHTBAUER_LADENBURG_HPP_
#define CRYOCOOL_FUECHTBAUER_LADENBURG_HPP_

#include <stdexcept>

#include "cryocool/constants.hpp"
#include "cryocool/spectrum.hpp"

namespace cryocool::spectra {

/// Absolute emission cross section from a relative photoluminescence
/// spectrum and the radiative lifetime:
///   sigma_se(l) = l^5 I(l) / (8 pi n^2 c tau_rad lambda_F Sigma)
/// with Sigma = int I dl and lambda_F the intensity-weighted mean wavelength
/// of the same spectrum. The normalization by Sigma makes the result
/// invariant under rescaling of I.
inline Spectrum fl_emission_cross_section(const Spectrum& pl_intensity, double tau_rad,
                                          double n_refractive) {
    if (pl_intensity.kind() != SpectrumKind::Intensity)
        throw std::invalid_argument("fl_emission_cross_section: input must be an intensity spectrum");
    if (!(tau_rad > 0.0))
        throw std::invalid_argument("fl_emission_cross_section: radiative lifetime must be > 0");
    if (!(n_refractive >= 1.0))
        throw std::invalid_argument("fl_emission_cross_section: refractive index must be >= 1");

    double sum = integrate_trapezoid(pl_intensity);
    double lambda_f = mean_fluorescence_wavelength(pl_intensity);  // rejects all-zero input
    double denom = 8.0 * constants::pi * n_refractive * n_refractive * constants::speed_of_light *
                   tau_rad * lambda_f * sum;
    return pl_intensity.map(
        [&](double l, double v) { return l * l * l * l * l * v / denom; },
        SpectrumKind::CrossSection);
}

}  // namespace cryocool::spectra

#endif
