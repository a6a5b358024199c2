#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordgraph {

// DSL or word input that cannot be read. line/column are 1-based; 0 when not applicable.
class PresentationError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownIdentifier, Duplicate, InvalidParameter, Invalid };
  PresentationError(Kind kind, const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                                : msg),
        kind_(kind),
        line_(line),
        column_(column) {}
  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_, column_;
};

class NonComposable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation outside its domain (split past the end, normal_blocks of an identity, ...).
class UndefinedPath : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotConstructible : public std::runtime_error {
 public:
  NotConstructible(std::string stage, const std::string& detail)
      : std::runtime_error("not constructible at stage '" + stage + "': " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace ordgraph
