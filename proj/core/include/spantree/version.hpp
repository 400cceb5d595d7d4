#pragma once

namespace spantree {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spantree
