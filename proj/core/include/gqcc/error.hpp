#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gqcc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-readable name, e.g. "ValidationError::DeadEnd".
  virtual std::string kind() const { return "Error"; }
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }
  std::string kind() const override { return "ParseError"; }

 private:
  std::size_t line_;
};

enum class Axiom { Loop, DeadEnd, Disconnected };

std::string_view to_string(Axiom a) noexcept;

/// A graph violating one of the standing hypotheses (no loops, no dead ends, connected).
class ValidationError : public Error {
 public:
  ValidationError(Axiom axiom, const std::string& detail);
  Axiom axiom() const noexcept { return axiom_; }
  std::string kind() const override;

 private:
  Axiom axiom_;
};

#define GQCC_DEFINE_ERROR(Name)                                \
  class Name : public Error {                                  \
   public:                                                     \
    using Error::Error;                                        \
    std::string kind() const override { return #Name; }        \
  };

GQCC_DEFINE_ERROR(UnknownVertex)
GQCC_DEFINE_ERROR(DepthCapExceeded)
GQCC_DEFINE_ERROR(BallCapExceeded)
GQCC_DEFINE_ERROR(ZeroParameter)
GQCC_DEFINE_ERROR(ExceptionalParameter)
GQCC_DEFINE_ERROR(IndeterminateWithinRadius)
GQCC_DEFINE_ERROR(DimensionMismatch)

#undef GQCC_DEFINE_ERROR

}  // namespace gqcc
