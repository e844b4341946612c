#ifndef CRYOCOOL_DATAPATH_HPP_
#define CRYOCOOL_DATAPATH_HPP_

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>

namespace cryocool {

/// Locate a data file: as given, then under each colon-separated directory
/// in $CRYOCOOL_DATA_PATH.
inline std::optional<std::string> find_data_file(const std::string& name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (fs::exists(name, ec)) return name;
    if (const char* env = std::getenv("CRYOCOOL_DATA_PATH")) {
        std::string paths(env);
        std::size_t pos = 0;
        while (pos <= paths.size()) {
            std::size_t colon = paths.find(':', pos);
            std::string dir =
                paths.substr(pos, colon == std::string::npos ? std::string::npos : colon - pos);
            if (!dir.empty()) {
                fs::path candidate = fs::path(dir) / name;
                if (fs::exists(candidate, ec)) return candidate.string();
            }
            if (colon == std::string::npos) break;
            pos = colon + 1;
        }
    }
    return std::nullopt;
}

}  // namespace cryocool

#endif
