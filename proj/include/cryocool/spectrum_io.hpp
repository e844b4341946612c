#ifndef CRYOCOOL_SPECTRUM_IO_HPP_
#define CRYOCOOL_SPECTRUM_IO_HPP_

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cryocool/format.hpp"
#include "cryocool/spectrum.hpp"

// Spectrum file format:
//   # kind=cross_section_m2        (or intensity_arb; must come first)
//   # any further comment lines
//   <wavelength_nm>,<value>
// Wavelengths strictly increasing; parse errors carry the line number.
namespace cryocool::spectra {

inline Spectrum parse_spectrum(std::istream& in, const std::string& source_name) {
    auto fail = [&](long long line, const std::string& msg) {
        throw std::runtime_error(source_name + ":" + detail::format_int(line) + ": " + msg);
    };

    std::string line;
    long long line_no = 0;
    bool have_kind = false;
    SpectrumKind kind = SpectrumKind::Intensity;
    std::vector<double> w, v;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view s = detail::trim(line);
        if (s.empty()) continue;
        if (s.front() == '#') {
            std::string_view body = detail::trim(s.substr(1));
            if (body.rfind("kind=", 0) == 0) {
                std::string_view k = detail::trim(body.substr(5));
                if (k == "cross_section_m2")
                    kind = SpectrumKind::CrossSection;
                else if (k == "intensity_arb")
                    kind = SpectrumKind::Intensity;
                else
                    fail(line_no, "unknown spectrum kind '" + std::string(k) + "'");
                have_kind = true;
            }
            continue;
        }
        if (!have_kind)
            fail(line_no, "data before '# kind=<cross_section_m2|intensity_arb>' header");
        auto comma = s.find(',');
        if (comma == std::string_view::npos) fail(line_no, "expected '<wavelength_nm>,<value>'");
        double nm, val;
        try {
            nm = detail::parse_double(s.substr(0, comma), "wavelength");
            val = detail::parse_double(s.substr(comma + 1), "value");
        } catch (const std::invalid_argument& e) {
            fail(line_no, e.what());
            throw;  // unreachable
        }
        double lambda_m = nm * constants::nanometer;
        if (!w.empty() && lambda_m <= w.back())
            fail(line_no, "wavelengths must be strictly increasing");
        w.push_back(lambda_m);
        v.push_back(val);
    }
    if (!have_kind) fail(line_no, "missing '# kind=' header");
    if (w.size() < 2) fail(line_no, "spectrum needs at least 2 samples");
    try {
        return Spectrum(std::move(w), std::move(v), kind);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(source_name + ": " + e.what());
    }
}

inline Spectrum load_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spectrum file '" + path + "'");
    return parse_spectrum(in, path);
}

inline void write_spectrum(std::ostream& out, const Spectrum& s,
                           const std::vector<std::string>& comment_lines = {}) {
    out << "# kind=" << to_string(s.kind()) << "\n";
    for (const auto& c : comment_lines) out << "# " << c << "\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out << detail::format_double(s.wavelengths()[i] / constants::nanometer) << ","
            << detail::format_double(s.values()[i]) << "\n";
}

inline void write_spectrum_file(const std::string& path, const Spectrum& s,
                                const std::vector<std::string>& comment_lines = {}) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_spectrum(out, s, comment_lines);
}

}  // namespace cryocool::spectra

#endif
