#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace owlet {

/// Base class for all owlet errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Structural violation in the axiom model: malformed IRI, role conflict,
/// characteristic on the wrong property kind, and similar.
class ModelError : public Error {
public:
  explicit ModelError(const std::string& msg) : Error(msg) {}
};

/// Input could not be parsed. Carries a 1-based position when known
/// (line == 0 means "no position").
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
    if (line == 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

/// The model cannot be rendered in the requested syntax.
class SerializationError : public Error {
public:
  explicit SerializationError(const std::string& msg) : Error(msg) {}
};

}  // namespace owlet
