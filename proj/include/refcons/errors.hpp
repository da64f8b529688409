#pragma once

#include <stdexcept>
#include <string>

namespace refcons {

/// A matrix or vector failed a quantum-state contract (norm, trace,
/// Hermiticity, positivity, unitarity). The message carries the offending
/// magnitude.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace refcons
