#pragma once

namespace ordalg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ordalg
