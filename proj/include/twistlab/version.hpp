#pragma once

namespace twistlab {

inline constexpr const char* version = "0.1.0";

}
