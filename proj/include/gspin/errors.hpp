#pragma once

#include <stdexcept>
#include <string>

namespace gspin {

/// Malformed input: unknown group spec, bad CLI flags, unreadable table file.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural validation failed: table is not a group, subgroup not normal, ...
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested instance exceeds a configured size cap.
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gspin
