#include "pncalc/error.hpp"

#include <utility>

namespace pncalc {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& found)
    : Error("syntax error at position " + std::to_string(position) + ": expected " +
            join_expected(expected) + ", found " + found),
      position_(position),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::string name)
    : Error("unknown identifier '" + name + "'"), name_(std::move(name)) {}

DivisionByZeroConstant::DivisionByZeroConstant(std::size_t position)
    : Error("division by the constant 0 at position " + std::to_string(position)) {}

DivisionByZero::DivisionByZero() : Error("division by the zero function") {}

PoleAtPoint::PoleAtPoint() : Error("denominator vanishes at the evaluation point") {}

IndexOutOfRange::IndexOutOfRange(std::size_t index, std::size_t dim)
    : Error("coordinate index " + std::to_string(index) + " out of range for dimension " +
            std::to_string(dim)) {}

ChartMismatch::ChartMismatch() : Error("operands live on different charts") {}

DegreeMismatch::DegreeMismatch(int lhs, int rhs)
    : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

NotSkew::NotSkew() : Error("contravariant 2-tensor is not skew-symmetric") {}

PreconditionFailed::PreconditionFailed(std::string predicate)
    : Error("precondition failed: " + predicate), predicate_(std::move(predicate)) {}

BadDegree::BadDegree(const std::string& what) : Error("bad degree: " + what) {}

UnknownFixture::UnknownFixture(const std::string& name) : Error("unknown fixture '" + name + "'") {}

GenerationFailed::GenerationFailed(const std::string& what)
    : Error("generated structure failed validation: " + what) {}

FileNotFound::FileNotFound(const std::string& path) : Error("cannot open file '" + path + "'") {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
            ": " + what),
      line_(line),
      column_(column) {}

}  // namespace pncalc
