#pragma once

namespace cyclemagic {

inline constexpr const char* kToolName = "cyclemagic";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace cyclemagic
