#pragma once

#include <stdexcept>
#include <string>

namespace chow {

/* Base class for every error raised by this library. */
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Invalid input: malformed tree, foreign variable, non-invariant class,
 * empty group, unparsable text, ... */
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/* A vertex multiplicity exceeds what the requested operation supports. */
class MultiplicityError : public Error {
public:
    explicit MultiplicityError(const std::string& msg) : Error(msg) {}
};

/* A polynomial operation would exceed the configured total-degree bound. */
class DegreeBoundError : public Error {
public:
    explicit DegreeBoundError(const std::string& msg) : Error(msg) {}
};

/* A fixed-point pair violates the integrality condition required for the
 * localization pushforward. */
class LocalizationError : public Error {
public:
    explicit LocalizationError(const std::string& msg) : Error(msg) {}
};

/* An internal consistency check failed; indicates a bug, not bad input. */
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace chow
