#pragma once

namespace faceq {

inline constexpr const char* kVersion = "0.1.0";

} // namespace faceq
