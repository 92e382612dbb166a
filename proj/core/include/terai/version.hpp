#pragma once

namespace terai {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace terai
