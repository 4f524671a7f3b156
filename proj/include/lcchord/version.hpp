#pragma once

namespace lcchord {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace lcchord
