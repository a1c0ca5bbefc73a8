#pragma once

namespace twt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace twt
