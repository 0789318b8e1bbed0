#pragma once

namespace tcone {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tcone
