#ifndef CAMRING_DIGEST_HPP
#define CAMRING_DIGEST_HPP

#include <string>

namespace camring {

/// SHA-256 hex digest; used for the run manifest's input hash.
std::string sha256_hex(const std::string& data);

} // namespace camring

#endif
