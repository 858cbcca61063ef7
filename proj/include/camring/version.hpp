#ifndef CAMRING_VERSION_HPP
#define CAMRING_VERSION_HPP

namespace camring {

inline constexpr const char* kVersion = "1.0.0";

} // namespace camring

#endif
