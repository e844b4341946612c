#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "cryocool/constants.hpp"
#include "cryocool/spectrum.hpp"

using namespace cryocool;
using spectra::Spectrum;
using spectra::SpectrumKind;
using Catch::Matchers::WithinRel;

namespace {

Spectrum two_point() {
    return Spectrum({700e-9, 710e-9}, {2.0, 4.0}, SpectrumKind::Intensity);
}

}  // namespace

TEST_CASE("construction rejects malformed input") {
    REQUIRE_THROWS_AS(Spectrum({700e-9}, {1.0}, SpectrumKind::Intensity), std::invalid_argument);
    REQUIRE_THROWS_AS(Spectrum({700e-9, 710e-9}, {1.0}, SpectrumKind::Intensity),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(Spectrum({710e-9, 700e-9}, {1.0, 2.0}, SpectrumKind::Intensity),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(Spectrum({700e-9, 700e-9}, {1.0, 2.0}, SpectrumKind::Intensity),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(Spectrum({-700e-9, 710e-9}, {1.0, 2.0}, SpectrumKind::Intensity),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(Spectrum({700e-9, 710e-9}, {1.0, -2.0}, SpectrumKind::Intensity),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(Spectrum({700e-9, 710e-9}, {1.0, std::nan("")}, SpectrumKind::Intensity),
                      std::invalid_argument);
}

TEST_CASE("interpolation: midpoint and grid-point exactness") {
    Spectrum s = two_point();
    // midpoint up to the nm representation of the query; grid points exact
    REQUIRE_THAT(s.interpolate(705e-9), WithinRel(3.0, 1e-12));
    REQUIRE(s.interpolate(700e-9) == 2.0);
    REQUIRE(s.interpolate(710e-9) == 4.0);
}

TEST_CASE("interpolation: out of range is an error naming the interval") {
    Spectrum s = two_point();
    REQUIRE_THROWS_AS(s.interpolate(699e-9), std::out_of_range);
    REQUIRE_THROWS_AS(s.interpolate(711e-9), std::out_of_range);
    try {
        s.interpolate(650e-9);
        FAIL("expected out_of_range");
    } catch (const std::out_of_range& e) {
        std::string msg = e.what();
        REQUIRE(msg.find("700") != std::string::npos);
        REQUIRE(msg.find("710") != std::string::npos);
    }
}

TEST_CASE("interpolation matches an analytic quadratic within the linear error bound") {
    // f(x) = 2 + 0.01 (x - 700)^2 on a 1 nm grid; |error| <= h^2 max|f''| / 8
    auto f = [](double nm) { return 2.0 + 0.01 * (nm - 700.0) * (nm - 700.0); };
    std::vector<double> w, v;
    for (int i = 0; i <= 10; ++i) {
        w.push_back((700.0 + i) * constants::nanometer);
        v.push_back(f(700.0 + i));
    }
    Spectrum s(w, v, SpectrumKind::Intensity);
    double bound = 0.02 / 8.0;  // h = 1 nm
    for (double nm : {700.37, 702.5, 704.99, 707.123, 709.5}) {
        double got = s.interpolate(nm * constants::nanometer);
        REQUIRE(std::abs(got - f(nm)) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("interpolation stays within neighboring samples") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> val(0.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> w, v;
        double nm = 500.0;
        for (int i = 0; i < 20; ++i) {
            w.push_back(nm * constants::nanometer);
            v.push_back(val(rng));
            nm += 0.5 + 10.0 * val(rng) / 10.0;
        }
        Spectrum s(w, v, SpectrumKind::Intensity);
        std::uniform_real_distribution<double> pick(s.min_wavelength(), s.max_wavelength());
        for (int q = 0; q < 20; ++q) {
            double lambda = pick(rng);
            double got = s.interpolate(lambda);
            auto it = std::upper_bound(w.begin(), w.end(), lambda);
            std::size_t i = (it == w.end()) ? w.size() - 2 : static_cast<std::size_t>(it - w.begin()) - 1;
            REQUIRE(got >= std::min(v[i], v[i + 1]));
            REQUIRE(got <= std::max(v[i], v[i + 1]));
        }
    }
}

TEST_CASE("mean fluorescence wavelength of a symmetric peak") {
    // narrow gaussian centered at 738 nm on a symmetric window
    std::vector<double> w, v;
    for (int i = 0; i <= 200; ++i) {
        double nm = 688.0 + 0.5 * i;
        w.push_back(nm * constants::nanometer);
        v.push_back(std::exp(-0.5 * std::pow((nm - 738.0) / 2.0, 2)));
    }
    Spectrum s(w, v, SpectrumKind::Intensity);
    double lf = spectra::mean_fluorescence_wavelength(s);
    REQUIRE(std::abs(lf - 738e-9) <= 0.5 * constants::nanometer);
    REQUIRE(lf >= s.min_wavelength());
    REQUIRE(lf <= s.max_wavelength());
}

TEST_CASE("mean fluorescence wavelength is scale invariant") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> val(0.0, 5.0);
    std::vector<double> w, v;
    for (int i = 0; i <= 50; ++i) {
        w.push_back((600.0 + 3.0 * i) * constants::nanometer);
        v.push_back(val(rng));
    }
    Spectrum a(w, v, SpectrumKind::Intensity);
    std::vector<double> v2 = v;
    for (auto& x : v2) x *= 137.5;
    Spectrum b(w, v2, SpectrumKind::Intensity);
    REQUIRE_THAT(spectra::mean_fluorescence_wavelength(a),
                 WithinRel(spectra::mean_fluorescence_wavelength(b), 1e-12));
}

TEST_CASE("mean fluorescence wavelength rejects an all-zero spectrum") {
    Spectrum s({700e-9, 710e-9, 720e-9}, {0.0, 0.0, 0.0}, SpectrumKind::Intensity);
    REQUIRE_THROWS_AS(spectra::mean_fluorescence_wavelength(s), std::domain_error);
}

TEST_CASE("trapezoid integral of a linear ramp is exact") {
    // int of v = lambda over [1, 3] um = 4 um^2
    Spectrum s({1e-6, 2e-6, 3e-6}, {1e-6, 2e-6, 3e-6}, SpectrumKind::Intensity);
    REQUIRE_THAT(spectra::integrate_trapezoid(s), WithinRel(4e-12, 1e-14));
}
