#pragma once

namespace eelab {

inline constexpr const char* kToolName = "eelab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace eelab
