#pragma once

namespace xxness {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace xxness
