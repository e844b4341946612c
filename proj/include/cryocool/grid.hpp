#ifndef CRYOCOOL_GRID_HPP_
#define CRYOCOOL_GRID_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cryocool/format.hpp"

namespace cryocool {

/// Inclusive linear grid written as `start:stop:count`. A bare number is the
/// degenerate single-point grid.
struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    long long count = 1;

    static GridSpec parse(std::string_view text) {
        text = detail::trim(text);
        GridSpec g;
        auto c1 = text.find(':');
        if (c1 == std::string_view::npos) {
            g.start = g.stop = detail::parse_double(text, "grid value");
            g.count = 1;
            return g;
        }
        auto c2 = text.find(':', c1 + 1);
        if (c2 == std::string_view::npos)
            throw std::invalid_argument("grid spec '" + std::string(text) +
                                        "' must be '<start>:<stop>:<count>' or a single value");
        g.start = detail::parse_double(text.substr(0, c1), "grid start");
        g.stop = detail::parse_double(text.substr(c1 + 1, c2 - c1 - 1), "grid stop");
        g.count = detail::parse_int(text.substr(c2 + 1), "grid count");
        if (g.count < 1)
            throw std::invalid_argument("grid spec: count must be >= 1");
        if (g.count == 1 && g.start != g.stop)
            throw std::invalid_argument("grid spec: count 1 needs start == stop");
        if (g.count > 1 && !(g.stop > g.start))
            throw std::invalid_argument("grid spec: stop must exceed start");
        if (g.count > 10'000'000)
            throw std::invalid_argument("grid spec: count too large");
        return g;
    }

    std::string to_string() const {
        if (count == 1) return detail::format_double(start);
        return detail::format_double(start) + ":" + detail::format_double(stop) + ":" +
               detail::format_int(count);
    }

    std::vector<double> values() const {
        std::vector<double> v;
        v.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            v.push_back(start);
            return v;
        }
        double step = (stop - start) / static_cast<double>(count - 1);
        for (long long i = 0; i < count; ++i)
            v.push_back(i == count - 1 ? stop : start + static_cast<double>(i) * step);
        return v;
    }

    GridSpec scaled(double factor) const { return GridSpec{start * factor, stop * factor, count}; }
};

}  // namespace cryocool

#endif
