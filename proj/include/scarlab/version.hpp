#pragma once

namespace scarlab {

inline constexpr const char* kVersion = "scarlab 0.1.0";

}  // namespace scarlab
