#ifndef CRYOCOOL_MCCUMBER_HPP_
#define CRYOCOOL_MCCUMBER_HPP_

#include <cmath>
#include <stdexcept>

#include "cryocool/constants.hpp"
#include "cryocool/spectrum.hpp"

namespace cryocool::spectra {

/// Ground/excited doublet structure of a defect. Each doublet is modeled as
/// d equally spaced levels of unit per-level degeneracy, separated by its
/// splitting energy; level energies are measured from the doublet bottom.
/// lambda_zl is the zero-phonon-line wavelength that fixes the transition
/// energy between the two doublet bottoms.
struct DoubletStructure {
    double delta_e_lower;  // J, splitting of the lower doublet
    double delta_e_upper;  // J, splitting of the upper doublet
    int d_lower;
    int d_upper;
    double lambda_zl;      // m

    static DoubletStructure from_ev(double delta_e_lower_ev, double delta_e_upper_ev,
                                    int d_lower, int d_upper, double lambda_zl_m) {
        DoubletStructure d{delta_e_lower_ev * constants::electron_volt,
                           delta_e_upper_ev * constants::electron_volt,
                           d_lower, d_upper, lambda_zl_m};
        d.validate();
        return d;
    }

    void validate() const {
        if (!(delta_e_lower > 0.0) || !(delta_e_upper > 0.0))
            throw std::invalid_argument("doublet: level splittings must be > 0");
        if (d_lower < 1 || d_upper < 1)
            throw std::invalid_argument("doublet: degeneracies must be >= 1");
        if (!(lambda_zl > 0.0))
            throw std::invalid_argument("doublet: zero-phonon-line wavelength must be > 0");
    }
};

namespace detail_mccumber {

// partition function of a d-level ladder with spacing delta_e:
// sum_{k=0}^{d-1} exp(-k dE/kT) = expm1(-d dE/kT) / expm1(-dE/kT)
inline double ladder_partition(double delta_e, int d, double kT) {
    return std::expm1(-static_cast<double>(d) * delta_e / kT) / std::expm1(-delta_e / kT);
}

}  // namespace detail_mccumber

/// Z_lower / Z_upper for the two doublets at temperature T.
inline double partition_ratio(double T, const DoubletStructure& levels) {
    levels.validate();
    if (!(T > 0.0)) throw std::invalid_argument("partition ratio: temperature must be > 0");
    double kT = constants::boltzmann * T;
    return detail_mccumber::ladder_partition(levels.delta_e_lower, levels.d_lower, kT) /
           detail_mccumber::ladder_partition(levels.delta_e_upper, levels.d_upper, kT);
}

/// Reciprocity ratio sigma_se / sigma_abs at a given wavelength:
/// Z_ratio * exp[(hc/lambda_zl - hc/lambda) / kT]. Equals the bare partition
/// ratio exactly at the zero-phonon line.
inline double mccumber_ratio(double lambda_m, double T, const DoubletStructure& levels) {
    if (!(lambda_m > 0.0)) throw std::invalid_argument("mccumber ratio: wavelength must be > 0");
    double z = partition_ratio(T, levels);
    double exponent =
        (constants::hc / levels.lambda_zl - constants::hc / lambda_m) / (constants::boltzmann * T);
    return z * std::exp(exponent);
}

/// Pointwise sigma_abs(lambda) = sigma_se(lambda) / mccumber_ratio(lambda) on
/// the emission spectrum's own grid.
inline Spectrum absorption_from_emission(const Spectrum& sigma_se, double T,
                                         const DoubletStructure& levels) {
    if (sigma_se.kind() != SpectrumKind::CrossSection)
        throw std::invalid_argument("absorption_from_emission: input must be a cross-section spectrum");
    return sigma_se.map(
        [&](double lambda, double value) { return value / mccumber_ratio(lambda, T, levels); },
        SpectrumKind::CrossSection);
}

}  // namespace cryocool::spectra

#endif
