#pragma once

#include <string_view>

namespace wgm {

inline constexpr std::string_view kToolName = "wgm-scatter";
inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace wgm
