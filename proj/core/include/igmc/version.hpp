#ifndef IGMC_VERSION_HPP
#define IGMC_VERSION_HPP

#include <string_view>

namespace igmc {

inline constexpr std::string_view kVersion = "0.1.0";

} // namespace igmc

#endif // IGMC_VERSION_HPP
