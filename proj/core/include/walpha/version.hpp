#pragma once

namespace walpha {

inline constexpr const char* kVersion = "0.1.0";

}
