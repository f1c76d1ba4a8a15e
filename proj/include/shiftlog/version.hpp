#pragma once

#include <string_view>

namespace shiftlog {

inline constexpr std::string_view kToolName = "shiftlog";
inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace shiftlog
