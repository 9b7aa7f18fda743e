#pragma once

#include <stdexcept>
#include <string>

namespace logw {

// unsupported (kind, rank) combinations and malformed run configs
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// precondition violations on operation arguments
struct ArgumentError : std::runtime_error {
    explicit ArgumentError(const std::string& m) : std::runtime_error(m) {}
};

// configured cap exceeded (Weyl group size, basis size, lambda count)
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& m) : std::runtime_error(m) {}
};

// consistency failures that signal an implementation bug (e.g. a division
// that must be exact leaving a remainder)
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace logw
