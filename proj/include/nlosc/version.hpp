#pragma once

namespace nlosc {

inline constexpr const char* project_name = "nlosc";
inline constexpr const char* project_version = "1.0.0";
inline constexpr const char* version_string = "nlosc 1.0.0";

}  // namespace nlosc
