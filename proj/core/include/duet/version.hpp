#pragma once

namespace duet {

// Keep in sync with the project() version in the top-level CMakeLists.txt.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace duet
