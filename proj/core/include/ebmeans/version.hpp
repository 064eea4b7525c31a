#pragma once

namespace ebmeans {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ebmeans
