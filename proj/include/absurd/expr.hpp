#pragma once

// Expressions over absurd numbers: parsing, bottom-up simplification to a
// sum of pairwise incommensurate terms, and rendering of such sums.
//
// Grammar (loosest to tightest):
//   sum     := product (('+' | '-') product)*
//   product := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := integer | '(' sum ')' | 'sqrt' '(' sum ')'
// Exponents must fold to a rational number.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absurd/core.hpp"
#include "absurd/forms.hpp"

namespace absurd {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, negate, add, subtract, multiply, divide, power };

  Kind kind = Kind::number;
  Rational value;     // number literal
  Rational exponent;  // power
  ExprPtr lhs;        // operand of negate and power, left of binaries
  ExprPtr rhs;
  std::size_t position = 0;  // offset of the node's first character

  static ExprPtr number(Rational v, std::size_t pos = 0);
  static ExprPtr negate(ExprPtr e, std::size_t pos = 0);
  static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r, std::size_t pos = 0);
  static ExprPtr power(ExprPtr base, Rational exponent, std::size_t pos = 0);
};

// Throws ParseError (SyntaxError or NonRationalExponent).
ExprPtr parse(std::string_view text);

// Fully parenthesized debug form.
std::string to_debug_string(const Expr& e);

// Terms are nonzero, pairwise incommensurate and sorted by factor list.
// No terms means zero.
struct SumOfAbsurds {
  std::vector<AbsurdNumber> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  bool is_single() const noexcept { return terms.size() == 1; }
};

SumOfAbsurds simplify(const Expr& e);
SumOfAbsurds simplify(std::string_view text);

// Sum of arbitrary terms with commensurate ones merged.
SumOfAbsurds make_sum(std::vector<AbsurdNumber> terms);

// Lexicographic order on factor lists (base, then exponent).
bool factor_list_less(const AbsurdNumber& a, const AbsurdNumber& b);

struct SumRenderOptions {
  std::optional<FormKind> kind;  // nullopt: most concise over the recommended kinds
  Layout layout = Layout::product;
  bool latex = false;
  std::optional<std::uint64_t> budget;
};

// One display form per term, all of the same kind.
struct RenderedSum {
  std::optional<FormKind> kind;  // nullopt for zero
  std::vector<DisplayForm> forms;
  std::string text;
};

// Throws FactoringBudgetExhausted if an explicitly requested kind fails.
RenderedSum render_sum(const SumOfAbsurds& s, const SumRenderOptions& opts = {});

}  // namespace absurd
