#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperkit {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Bad arguments: element index out of range, unknown axiom name, bounds.
  class UsageError : public Error {
   public:
    using Error::Error;
  };

  // A table or constant violates the shape invariants of its type.
  class InvalidStructure : public Error {
   public:
    using Error::Error;
  };

  // Malformed structure document. line and column are 1-based.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& msg)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column),
          _message(msg) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }
    std::string const& message() const noexcept {
      return _message;
    }

   private:
    std::size_t _line;
    std::size_t _column;
    std::string _message;
  };

  // A construction's own postcondition failed. Never expected on valid input.
  class PostconditionViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace hyperkit
