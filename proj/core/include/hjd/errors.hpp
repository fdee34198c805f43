#pragma once

#include <stdexcept>
#include <string>

namespace hjd {

/// Raised when a config document is missing, malformed, or has bad keys.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on file read/write failures; message carries the path.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a backward sweep produces non-finite values.
/// `time_index` is the trajectory level at which the step failed.
class DivergedStepError : public std::runtime_error {
public:
    DivergedStepError(const std::string& what, int time_index)
        : std::runtime_error(what), time_index(time_index) {}
    int time_index;
};

/// Raised when the terminal-cost ball contains no grid vertex.
class EmptyBallError : public std::domain_error {
public:
    explicit EmptyBallError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a Hamiltonian has no convex Legendre dual.
class UnsupportedLagrangianError : public std::domain_error {
public:
    explicit UnsupportedLagrangianError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace hjd
