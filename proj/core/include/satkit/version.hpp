#pragma once

namespace satkit {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "satellite-kit/1";

}  // namespace satkit
