#pragma once

namespace minors {

inline constexpr const char* kToolName = "minors";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace minors
