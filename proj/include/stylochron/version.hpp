#pragma once

namespace stylochron {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stylochron
