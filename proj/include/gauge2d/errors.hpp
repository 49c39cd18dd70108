#pragma once

#include <stdexcept>
#include <string>

namespace gauge2d {

/// Input outside an operation's domain (non-finite values, zero vectors where
/// forbidden, invalid polygon, irregular curve, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation not supported by the given gauge kind (derivatives of a polygonal
/// gauge, analytic gradient of a gauge that has none).
struct CapabilityError : std::runtime_error {
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation could not meet its numerical contract (quadrature failure,
/// curvature below the evolute threshold, ...).
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed job specification text.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure, carries path context in the message.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gauge2d
