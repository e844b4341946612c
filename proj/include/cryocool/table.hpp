#ifndef CRYOCOOL_TABLE_HPP_
#define CRYOCOOL_TABLE_HPP_

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace cryocool {

/// CSV result table: '#'-prefixed header lines carrying the full resolved
/// parameter set, a column-name line, then one data row per grid point.
/// Cells are preformatted strings so output is byte-reproducible.
struct OutputTable {
    std::vector<std::string> header;  // without the leading "# "
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void write(std::ostream& out) const {
        for (const auto& h : header) out << "# " << h << "\n";
        for (std::size_t c = 0; c < columns.size(); ++c)
            out << columns[c] << (c + 1 < columns.size() ? "," : "");
        out << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << row[c] << (c + 1 < row.size() ? "," : "");
            out << "\n";
        }
    }

    std::string to_string() const {
        std::ostringstream os;
        write(os);
        return os.str();
    }
};

}  // namespace cryocool

#endif
