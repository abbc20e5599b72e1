#ifndef RECTWALK_ERROR_HPP
#define RECTWALK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rectwalk {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input. `position` is a 0-based character offset
/// when the input is walk text, npos otherwise.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position = std::string::npos)
        : Error(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// An operation was called on an argument outside its domain
/// (e.g. star() on a walk that is not an excursion).
class DomainError : public Error {
public:
    using Error::Error;
};

/// is_leftmost() was asked about a sequence that is not a history walk.
class NotHistoryWalk : public DomainError {
public:
    using DomainError::DomainError;
};

/// A construction the theory says always succeeds did not. Seeing one of
/// these means either a convention bug or a counterexample worth reporting.
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A request exceeds a configured work cap (exhaustive enumeration size).
class CapExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace rectwalk

#endif
