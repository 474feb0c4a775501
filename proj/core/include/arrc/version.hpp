#pragma once

namespace arrc {
inline constexpr const char* version = "0.1.0";
}
