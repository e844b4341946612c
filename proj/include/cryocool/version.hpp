#ifndef CRYOCOOL_VERSION_HPP_
#define CRYOCOOL_VERSION_HPP_

namespace cryocool {

inline constexpr const char* version = "1.0.0";

}  // namespace cryocool

#endif
