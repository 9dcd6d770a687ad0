#pragma once

namespace ellgof {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ellgof
