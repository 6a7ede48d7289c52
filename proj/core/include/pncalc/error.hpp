#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pncalc {

/// Base class of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnknownIdentifier : public Error {
 public:
  explicit UnknownIdentifier(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DivisionByZeroConstant : public Error {
 public:
  explicit DivisionByZeroConstant(std::size_t position);
};

class DivisionByZero : public Error {
 public:
  DivisionByZero();
};

class PoleAtPoint : public Error {
 public:
  PoleAtPoint();
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t dim);
};

class ChartMismatch : public Error {
 public:
  ChartMismatch();
};

class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int lhs, int rhs);
};

class NotSkew : public Error {
 public:
  NotSkew();
};

/// A gated check was called on input violating one of its hypotheses.
class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(std::string predicate);
  const std::string& predicate() const noexcept { return predicate_; }

 private:
  std::string predicate_;
};

class NotAdmissible : public PreconditionFailed {
 public:
  NotAdmissible() : PreconditionFailed("is_admissible") {}
};

class NotCompatible : public PreconditionFailed {
 public:
  NotCompatible() : PreconditionFailed("is_compatible") {}
};

class BadDegree : public Error {
 public:
  explicit BadDegree(const std::string& what);
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name);
};

class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(const std::string& what);
};

class FileNotFound : public Error {
 public:
  explicit FileNotFound(const std::string& path);
};

/// Structure-definition file could not be read as JSON/TOML.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Structure-definition content violates its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pncalc
