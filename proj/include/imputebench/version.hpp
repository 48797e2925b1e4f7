#pragma once

namespace imputebench {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace imputebench
