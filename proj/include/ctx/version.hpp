#pragma once

namespace ctx {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ctx
