#pragma once

namespace qtherm {

inline constexpr const char* kToolName = "qtherm";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qtherm
