#pragma once

namespace sheafrig {

inline constexpr const char* kVersion = "0.1.0";

} // namespace sheafrig
