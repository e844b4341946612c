#ifndef CRYOCOOL_NV_ABSORPTION_HPP_
#define CRYOCOOL_NV_ABSORPTION_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cryocool/constants.hpp"
#include "cryocool/format.hpp"
#include "cryocool/spectrum.hpp"

namespace cryocool::spectra {

/// Smooth NV- absorption cross-section model. Below the 670 nm splice the
/// model interpolates a literature-derived table pinned to
/// 0.95e-20 m^2 at 532 nm; above it, sigma follows exp(quartic in lambda)
/// with coefficients fit to the anchor table in nv_quartic_anchors. The
/// coefficients are a re-fit and approximate: the long-wavelength tail of
/// this band has only been published as a log-scale guide curve.
class NvAbsorptionModel {
public:
    static constexpr double default_min = 500.0 * constants::nanometer;
    static constexpr double default_max = 850.0 * constants::nanometer;
    static constexpr double splice_nm = 670.0;

    NvAbsorptionModel() : NvAbsorptionModel(default_min, default_max) {}

    /// Validity range is configurable but only narrowable: the table does not
    /// extend below 500 nm and the quartic is unconstrained above 850 nm.
    NvAbsorptionModel(double min_wavelength_m, double max_wavelength_m)
        : min_(min_wavelength_m), max_(max_wavelength_m) {
        if (!(min_ < max_))
            throw std::invalid_argument("nv absorption model: empty validity range");
        if (min_ < default_min * (1.0 - 1e-12) || max_ > default_max * (1.0 + 1e-12))
            throw std::invalid_argument("nv absorption model: validity range must lie within [500, 850] nm");
    }

    double min_wavelength() const { return min_; }
    double max_wavelength() const { return max_; }

    double operator()(double lambda_m) const {
        if (lambda_m < min_ * (1.0 - 1e-12) || lambda_m > max_ * (1.0 + 1e-12))
            throw std::out_of_range(
                "nv absorption model: " + detail::format_double_msg(lambda_m / constants::nanometer) +
                " nm outside validity range [" +
                detail::format_double_msg(min_ / constants::nanometer) + ", " +
                detail::format_double_msg(max_ / constants::nanometer) + "] nm");
        double nm = lambda_m / constants::nanometer;
        if (nm <= splice_nm) return table_lookup(nm);
        return std::exp(quartic_log(nm));
    }

    /// Sample the model onto a regular grid (default 0.5 nm) over its
    /// validity range.
    Spectrum sample(double step_m = 0.5 * constants::nanometer) const {
        std::vector<double> w, v;
        double step_nm = step_m / constants::nanometer;
        double lo_nm = min_ / constants::nanometer;
        double hi_nm = max_ / constants::nanometer;
        auto n = static_cast<std::size_t>(std::floor((hi_nm - lo_nm) / step_nm + 0.5));
        for (std::size_t i = 0; i <= n; ++i) {
            double nm = lo_nm + static_cast<double>(i) * step_nm;
            if (nm > hi_nm) break;
            w.push_back(nm * constants::nanometer);
            v.push_back(nm <= splice_nm ? table_lookup(nm) : std::exp(quartic_log(nm)));
        }
        return Spectrum(std::move(w), std::move(v), SpectrumKind::CrossSection);
    }

    // ln sigma = sum_k c_k u^k with u = (lambda_nm - 760)/90; least-squares
    // fit through nv_quartic_anchors, monotone decreasing over (670, 850) nm
    static double quartic_log(double nm) {
        constexpr std::array<double, 5> c = {-55.59061799553606, -3.660118292487876,
                                             0.3851046019441476, -0.48418306855332305,
                                             0.4000170358724715};
        double u = (nm - 760.0) / 90.0;
        return c[0] + u * (c[1] + u * (c[2] + u * (c[3] + u * c[4])));
    }

    /// Anchor points (nm, m^2) the quartic tail was fit to.
    static const std::vector<std::pair<double, double>>& quartic_anchors() {
        static const std::vector<std::pair<double, double>> a = {
            {670.0, 1.0e-22}, {700.0, 1.2e-23}, {730.0, 2.7e-24},
            {760.0, 7.0e-25}, {800.0, 1.5e-25}, {850.0, 2.5e-26}};
        return a;
    }

private:
    static double table_lookup(double nm) {
        // 500-670 nm table, 1e-20 m^2; the 670 nm entry equals the quartic
        // branch there so the splice is continuous by construction
        static const std::vector<std::pair<double, double>> table = {
            {500.0, 0.55},  {510.0, 0.68},  {520.0, 0.80},  {530.0, 0.93},  {532.0, 0.95},
            {540.0, 1.03},  {550.0, 1.10},  {560.0, 1.14},  {570.0, 1.13},  {575.0, 1.10},
            {580.0, 1.05},  {590.0, 0.92},  {600.0, 0.76},  {610.0, 0.58},  {620.0, 0.42},
            {630.0, 0.30},  {637.0, 0.245}, {640.0, 0.215}, {650.0, 0.13},  {660.0, 0.040},
            {665.0, 0.020}, {670.0, std::exp(quartic_log(670.0)) * 1e20}};
        if (nm <= table.front().first) return table.front().second * 1e-20;
        for (std::size_t i = 0; i + 1 < table.size(); ++i) {
            if (nm <= table[i + 1].first) {
                double t = (nm - table[i].first) / (table[i + 1].first - table[i].first);
                return std::lerp(table[i].second, table[i + 1].second, t) * 1e-20;
            }
        }
        return table.back().second * 1e-20;
    }

    double min_;
    double max_;
};

}  // namespace cryocool::spectra

#endif
