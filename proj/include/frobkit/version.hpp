#pragma once

namespace frobkit {

inline constexpr const char* artifact_name = "frobkit";
inline constexpr const char* artifact_version = "0.1.0";

} // namespace frobkit
