#ifndef CAMRING_ERRORS_HPP
#define CAMRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace camring {

/// Bad or inconsistent input data (duplicate hyperplanes, weight constraint
/// violations, dimension mismatches, ...).  CLI exit code 2.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured computational bound was exceeded (group closure, Weyl
/// closure of a root system, ...).  CLI exit code 3.
struct BoundExceeded : std::runtime_error {
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace camring

#endif
