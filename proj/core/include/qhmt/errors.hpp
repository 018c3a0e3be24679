#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhmt {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QHMT_DEFINE_ERROR(Name)             \
  class Name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

// exact arithmetic
QHMT_DEFINE_ERROR(DivisionByZero);
QHMT_DEFINE_ERROR(FieldMismatch);
QHMT_DEFINE_ERROR(ShapeMismatch);

// algebra and tensor plumbing
QHMT_DEFINE_ERROR(OrderMismatch);
QHMT_DEFINE_ERROR(BadPermutation);
QHMT_DEFINE_ERROR(MissingCoproduct);
QHMT_DEFINE_ERROR(LegMismatch);

// quasi-Hopf structure
QHMT_DEFINE_ERROR(AxiomViolation);
QHMT_DEFINE_ERROR(MissingPivotalData);

// integrals and cointegrals
QHMT_DEFINE_ERROR(DimensionZero);
QHMT_DEFINE_ERROR(InconsistentModulus);
QHMT_DEFINE_ERROR(WrongSolutionDim);
QHMT_DEFINE_ERROR(VerificationFailed);

// representations
QHMT_DEFINE_ERROR(AlgebraMismatch);

// modified traces
QHMT_DEFINE_ERROR(NotUnimodular);
QHMT_DEFINE_ERROR(NotSymmetrisedCointegral);
QHMT_DEFINE_ERROR(BadPresentation);

// symplectic fermion family
QHMT_DEFINE_ERROR(BadBeta);
QHMT_DEFINE_ERROR(Overflow);

// text format
QHMT_DEFINE_ERROR(SemanticError);

#undef QHMT_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)), line_(line), column_(column), message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

// Raised by the text format parser; carries a 1-based position.
class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace qhmt
