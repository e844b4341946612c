#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cryocool/bundled.hpp"
#include "cryocool/constants.hpp"
#include "cryocool/fuechtbauer_ladenburg.hpp"

using namespace cryocool;
using spectra::Spectrum;
using spectra::SpectrumKind;
using Catch::Matchers::WithinRel;

TEST_CASE("emission cross section is invariant under intensity rescaling") {
    const auto& pl = spectra::bundled::siv_photoluminescence();
    std::vector<double> doubled = pl.values();
    for (auto& v : doubled) v *= 2.0;
    Spectrum pl2(pl.wavelengths(), doubled, SpectrumKind::Intensity);
    Spectrum a = spectra::fl_emission_cross_section(pl, 1.2e-9, 2.4);
    Spectrum b = spectra::fl_emission_cross_section(pl2, 1.2e-9, 2.4);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.values()[i] > 0.0) REQUIRE_THAT(b.values()[i], WithinRel(a.values()[i], 1e-12));
}

TEST_CASE("halving the radiative lifetime doubles the cross section") {
    const auto& pl = spectra::bundled::siv_photoluminescence();
    Spectrum a = spectra::fl_emission_cross_section(pl, 1.2e-9, 2.4);
    Spectrum b = spectra::fl_emission_cross_section(pl, 0.6e-9, 2.4);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.values()[i] > 0.0) REQUIRE_THAT(b.values()[i], WithinRel(2.0 * a.values()[i], 1e-12));
}

TEST_CASE("SiV cross section against a single-point hand evaluation") {
    const auto& pl = spectra::bundled::siv_photoluminescence();
    Spectrum se = spectra::fl_emission_cross_section(pl, 1.2e-9, 2.4);
    REQUIRE(se.kind() == SpectrumKind::CrossSection);
    REQUIRE(se.wavelengths() == pl.wavelengths());

    // independent evaluation at the 738 nm grid point: trapezoid sums done
    // longhand, then lambda^5 I / (8 pi n^2 c tau lambda_F Sigma)
    const auto& w = pl.wavelengths();
    const auto& v = pl.values();
    double sigma_sum = 0.0, weighted = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        double dw = w[i + 1] - w[i];
        sigma_sum += 0.5 * (v[i] + v[i + 1]) * dw;
        weighted += 0.5 * (w[i] * v[i] + w[i + 1] * v[i + 1]) * dw;
    }
    double lambda_f = weighted / sigma_sum;
    std::size_t zpl_index = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (std::abs(w[i] - 738e-9) < 1e-13) zpl_index = i;
    double lambda = w[zpl_index];
    double expected = std::pow(lambda, 5) * v[zpl_index] /
                      (8.0 * constants::pi * 2.4 * 2.4 * constants::speed_of_light * 1.2e-9 *
                       lambda_f * sigma_sum);
    REQUIRE_THAT(se.values()[zpl_index], WithinRel(expected, 1e-12));
    // reconstruction scale sanity: SiV peaks within a factor of a few of 1e-18 m^2
    REQUIRE(se.values()[zpl_index] > 1e-19);
    REQUIRE(se.values()[zpl_index] < 5e-18);
}

TEST_CASE("input validation") {
    const auto& pl = spectra::bundled::siv_photoluminescence();
    REQUIRE_THROWS_AS(spectra::fl_emission_cross_section(pl, 0.0, 2.4), std::invalid_argument);
    REQUIRE_THROWS_AS(spectra::fl_emission_cross_section(pl, 1.2e-9, 0.5), std::invalid_argument);
    REQUIRE_THROWS_AS(
        spectra::fl_emission_cross_section(spectra::bundled::siv_emission(), 1.2e-9, 2.4),
        std::invalid_argument);
    Spectrum zero({700e-9, 710e-9, 720e-9}, {0.0, 0.0, 0.0}, SpectrumKind::Intensity);
    REQUIRE_THROWS_AS(spectra::fl_emission_cross_section(zero, 1.2e-9, 2.4), std::domain_error);
}
