#pragma once

namespace ordreg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ordreg
