#pragma once

namespace pnc {

inline constexpr const char* kEngineVersion = "0.1.0";

} // namespace pnc
