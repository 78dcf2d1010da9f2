#pragma once

#include <stdexcept>
#include <string>

namespace berge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exact search was refused because the input exceeds a configured bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A checked theorem or internal contract failed. At desk scale this always
/// points at a bug; the message carries a graph6 dump of the offending input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace berge
