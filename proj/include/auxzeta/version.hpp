#pragma once

namespace auxzeta {
inline constexpr const char* kVersion = "auxzeta 0.1.0";
}
