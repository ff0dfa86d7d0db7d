#pragma once

namespace recfront {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace recfront
