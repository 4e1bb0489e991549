#pragma once

namespace h2core {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace h2core
