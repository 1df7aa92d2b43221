#pragma once

namespace pacsig {

inline constexpr const char* version = "0.1.0";

} // namespace pacsig
