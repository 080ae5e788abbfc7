#pragma once

namespace whs {

inline constexpr const char* kToolName = "whs";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace whs
