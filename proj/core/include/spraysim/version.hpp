#pragma once

namespace spraysim {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace spraysim
