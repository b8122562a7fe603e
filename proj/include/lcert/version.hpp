#pragma once

namespace lcert {

inline constexpr const char* kVersion = "lcert 0.1.0";

}  // namespace lcert
