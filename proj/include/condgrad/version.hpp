#pragma once

namespace condgrad {

inline constexpr const char* kVersion = "0.1.0";

} // namespace condgrad
