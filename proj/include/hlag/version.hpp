#pragma once

namespace hlag {

inline constexpr const char* kToolName = "hlag";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace hlag
