#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hurwitz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `position()` is the 0-based character offset.
class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A move (or the i-th move of a certificate) indexes outside the factorization.
class MoveRangeError : public Error {
public:
  MoveRangeError(const std::string &what, std::size_t move_index)
      : Error(what), move_index_(move_index) {}

  std::size_t move_index() const noexcept { return move_index_; }

private:
  std::size_t move_index_;
};

/// A planner invariant failed. Never expected; always a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace hurwitz
