#pragma once

namespace barriertop {

inline constexpr const char* kVersion = "0.1.0";

} // namespace barriertop
