#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cryocool/constants.hpp"
#include "cryocool/spectrum_io.hpp"

using namespace cryocool;
using spectra::Spectrum;
using spectra::SpectrumKind;

TEST_CASE("parse a cross-section file, nm converted to m") {
    std::istringstream in(
        "# kind=cross_section_m2\n"
        "# provenance comment\n"
        "\n"
        "532,0.95e-20\n"
        "600,0.76e-20\n"
        "700,1.2e-23\n");
    Spectrum s = spectra::parse_spectrum(in, "mem");
    REQUIRE(s.kind() == SpectrumKind::CrossSection);
    REQUIRE(s.size() == 3);
    REQUIRE(s.wavelengths()[0] == 532.0 * constants::nanometer);
    REQUIRE(s.values()[2] == 1.2e-23);
}

TEST_CASE("parse errors carry line numbers") {
    auto expect_error_at = [](const std::string& text, const std::string& line_tag) {
        std::istringstream in(text);
        try {
            spectra::parse_spectrum(in, "mem");
            FAIL("expected parse error");
        } catch (const std::runtime_error& e) {
            REQUIRE(std::string(e.what()).find("mem:" + line_tag) != std::string::npos);
        }
    };
    expect_error_at("# kind=cross_section_m2\n532,1e-20\n531,1e-20\n", "3");  // not increasing
    expect_error_at("# kind=cross_section_m2\n532;1e-20\n", "2");             // missing comma
    expect_error_at("# kind=cross_section_m2\n532,abc\n", "2");               // bad number
    expect_error_at("532,1e-20\n", "1");                                      // data before header
    expect_error_at("# kind=banana_units\n", "1");                            // bad kind
}

TEST_CASE("missing header and too-few samples are errors") {
    std::istringstream empty("");
    REQUIRE_THROWS_AS(spectra::parse_spectrum(empty, "mem"), std::runtime_error);
    std::istringstream one("# kind=intensity_arb\n700,1\n");
    REQUIRE_THROWS_AS(spectra::parse_spectrum(one, "mem"), std::runtime_error);
}

TEST_CASE("write/parse round trip preserves kind and samples") {
    Spectrum s({500e-9, 650.25e-9, 800e-9}, {0.0, 3.25e-21, 1e-22}, SpectrumKind::CrossSection);
    std::ostringstream out;
    spectra::write_spectrum(out, s, {"origin = unit test"});
    std::istringstream in(out.str());
    Spectrum back = spectra::parse_spectrum(in, "mem");
    REQUIRE(back.kind() == s.kind());
    REQUIRE(back.size() == s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        // values print in shortest round-trip form; wavelengths survive the
        // nm conversion to within an ulp
        REQUIRE(back.values()[i] == s.values()[i]);
        REQUIRE(std::abs(back.wavelengths()[i] - s.wavelengths()[i]) <= 1e-14 * s.wavelengths()[i]);
    }
}
