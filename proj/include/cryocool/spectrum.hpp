#ifndef CRYOCOOL_SPECTRUM_HPP_
#define CRYOCOOL_SPECTRUM_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cryocool/constants.hpp"
#include "cryocool/format.hpp"

namespace cryocool::spectra {

enum class SpectrumKind { CrossSection, Intensity };

inline const char* to_string(SpectrumKind k) {
    return k == SpectrumKind::CrossSection ? "cross_section_m2" : "intensity_arb";
}

/// Wavelength-indexed samples of a cross section (m^2) or a photoluminescence
/// intensity (arbitrary units). Wavelengths are meters, strictly increasing,
/// at least two of them; values are finite and non-negative. Immutable after
/// construction, so instances are safe to share across threads.
class Spectrum {
public:
    Spectrum(std::vector<double> wavelengths_m, std::vector<double> values, SpectrumKind kind)
        : wavelengths_(std::move(wavelengths_m)), values_(std::move(values)), kind_(kind) {
        if (wavelengths_.size() != values_.size())
            throw std::invalid_argument(
                "spectrum: wavelength/value length mismatch (" +
                detail::format_int(static_cast<long long>(wavelengths_.size())) + " vs " +
                detail::format_int(static_cast<long long>(values_.size())) + ")");
        if (wavelengths_.size() < 2)
            throw std::invalid_argument("spectrum: needs at least 2 samples");
        for (std::size_t i = 0; i < wavelengths_.size(); ++i) {
            if (!std::isfinite(wavelengths_[i]) || wavelengths_[i] <= 0.0)
                throw std::invalid_argument("spectrum: wavelength not finite and positive at index " +
                                            detail::format_int(static_cast<long long>(i)));
            if (i > 0 && wavelengths_[i] <= wavelengths_[i - 1])
                throw std::invalid_argument("spectrum: wavelengths not strictly increasing at index " +
                                            detail::format_int(static_cast<long long>(i)));
            if (!std::isfinite(values_[i]) || values_[i] < 0.0)
                throw std::invalid_argument("spectrum: value negative or non-finite at index " +
                                            detail::format_int(static_cast<long long>(i)));
        }
    }

    SpectrumKind kind() const { return kind_; }
    std::size_t size() const { return wavelengths_.size(); }
    const std::vector<double>& wavelengths() const { return wavelengths_; }
    const std::vector<double>& values() const { return values_; }
    double min_wavelength() const { return wavelengths_.front(); }
    double max_wavelength() const { return wavelengths_.back(); }

    bool contains(double lambda_m) const {
        return lambda_m >= wavelengths_.front() && lambda_m <= wavelengths_.back();
    }

    /// Piecewise-linear interpolation; exact at grid points. Queries outside
    /// [min, max] are an error, never an extrapolation.
    double interpolate(double lambda_m) const {
        if (!contains(lambda_m))
            throw std::out_of_range(
                "spectrum: wavelength " + detail::format_double_msg(lambda_m / constants::nanometer) +
                " nm outside sampled interval [" +
                detail::format_double_msg(wavelengths_.front() / constants::nanometer) + ", " +
                detail::format_double_msg(wavelengths_.back() / constants::nanometer) + "] nm");
        auto it = std::upper_bound(wavelengths_.begin(), wavelengths_.end(), lambda_m);
        std::size_t i = (it == wavelengths_.end()) ? wavelengths_.size() - 2
                                                   : static_cast<std::size_t>(it - wavelengths_.begin()) - 1;
        double t = (lambda_m - wavelengths_[i]) / (wavelengths_[i + 1] - wavelengths_[i]);
        return std::lerp(values_[i], values_[i + 1], t);
    }

    /// Same grid, values transformed pointwise by f(lambda, value).
    template <typename F>
    Spectrum map(F&& f, SpectrumKind out_kind) const {
        std::vector<double> out(values_.size());
        for (std::size_t i = 0; i < values_.size(); ++i) out[i] = f(wavelengths_[i], values_[i]);
        return Spectrum(wavelengths_, std::move(out), out_kind);
    }

private:
    std::vector<double> wavelengths_;
    std::vector<double> values_;
    SpectrumKind kind_;
};

/// Trapezoid rule on the native grid: integral of value over wavelength.
inline double integrate_trapezoid(const Spectrum& s) {
    const auto& w = s.wavelengths();
    const auto& v = s.values();
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        sum += 0.5 * (v[i] + v[i + 1]) * (w[i + 1] - w[i]);
    return sum;
}

/// Intensity-weighted mean wavelength, int(lambda v) / int(v), both integrals
/// by the trapezoid rule on the native grid.
inline double mean_fluorescence_wavelength(const Spectrum& s) {
    const auto& w = s.wavelengths();
    const auto& v = s.values();
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        double dw = w[i + 1] - w[i];
        num += 0.5 * (w[i] * v[i] + w[i + 1] * v[i + 1]) * dw;
        den += 0.5 * (v[i] + v[i + 1]) * dw;
    }
    if (!(den > 0.0))
        throw std::domain_error("mean fluorescence wavelength: spectrum integrates to zero");
    return num / den;
}

}  // namespace cryocool::spectra

#endif
