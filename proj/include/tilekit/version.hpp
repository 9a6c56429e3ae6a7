#ifndef TILEKIT_VERSION_HPP
#define TILEKIT_VERSION_HPP

namespace tilekit {
inline constexpr const char* kVersion = "0.1.0";
}

#endif  // TILEKIT_VERSION_HPP
