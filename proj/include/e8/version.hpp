#pragma once

namespace e8 {

inline constexpr const char* kCodeVersion = "1.0.0";

}  // namespace e8
