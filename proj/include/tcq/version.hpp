#pragma once

namespace tcq {

#ifndef TCQ_VERSION
#define TCQ_VERSION "v0.1.0"
#endif

inline constexpr const char* version_string = TCQ_VERSION;

}  // namespace tcq
