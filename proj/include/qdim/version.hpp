#pragma once

namespace qdim {
inline constexpr const char* kVersion = "0.1.0";
}
