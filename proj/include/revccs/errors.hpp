#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revccs {

enum class ErrorKind {
  Syntax,
  Arity,
  IncoherentTerm,
  NotAConfiguration,
  NoMatchingEvent,
  AmbiguousEvent,
  BoundExceeded,
  PreconditionViolated,
  CorrespondenceFailure,
  CapacityExceeded,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures carry the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, const std::string& message)
      : Error(kind, message + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace revccs
