#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace absurd {

enum class Errc {
  NonPositiveBase,
  ZeroToNegativePower,
  NegativeBaseFractionalPower,
  Indeterminate,
  DivisionByZero,
  UnsupportedDenominator,
  FractionalPowerOfSum,
  SyntaxError,
  NonRationalExponent,
  FactoringBudgetExhausted,
  MultiTermResult,
  Overflow,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class AbsurdError : public std::runtime_error {
 public:
  AbsurdError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Raised by the expression parser; `position` is a 0-based byte offset into
// the source text.
class ParseError : public AbsurdError {
 public:
  ParseError(Errc code, std::size_t position, const std::string& message)
      : AbsurdError(code, message + " at position " + std::to_string(position)),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace absurd
