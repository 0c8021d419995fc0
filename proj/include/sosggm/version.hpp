#pragma once

namespace sosggm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sosggm
