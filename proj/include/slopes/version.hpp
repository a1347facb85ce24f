#pragma once

namespace slopes {

inline constexpr const char* kVersion = "1.0.0";

} // namespace slopes
