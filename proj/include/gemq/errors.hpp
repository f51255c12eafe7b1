#pragma once

#include <stdexcept>
#include <string>

namespace gemq {

// Thrown when dimension algebra is violated: adding kg to m, crossing
// scalars, taking sqrt of an odd power, and so on.
class dimension_error : public std::runtime_error {
public:
    explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a physical precondition fails (non-positive mass or length,
// speed at or above c, unnormalized amplitudes, truncation too small).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed text input: unit strings, scenario configs, sweeps.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gemq
