#pragma once

namespace ridgekit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ridgekit
