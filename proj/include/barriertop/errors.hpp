#pragma once

#include <stdexcept>
#include <string>

namespace barriertop {

// Raised when an iterative scheme (root polish, Newton, quadrature) fails
// to reach its tolerance. Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for malformed configuration input. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace barriertop
