#pragma once

namespace quadrik {
inline constexpr const char* kVersion = "0.1.0";
}
