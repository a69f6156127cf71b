#pragma once

namespace frft {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace frft
