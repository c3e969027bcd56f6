#pragma once

// Canonical internal representation of absurd numbers: a rational coefficient
// times a sorted list of pairwise coprime integer radicands with exponents in
// (0,1). Radicands are fully factored over primes up to the configured bound;
// larger cofactors ("quasi-primes") are only perfect-power factored and kept
// coprime to each other with gcd splitting.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absurd/bigfloat.hpp"
#include "absurd/numkernel.hpp"

namespace absurd {

enum class BaseKind { prime, quasi_prime };

struct Factor {
  Integer base;
  Rational exponent;  // strictly inside (0,1)
  BaseKind kind = BaseKind::prime;

  friend bool operator==(const Factor& a, const Factor& b) {
    return a.base == b.base && a.exponent == b.exponent && a.kind == b.kind;
  }
};

// A base raised to an arbitrary rational exponent; input to normalization.
struct Radical {
  Integer base;  // >= 1
  Rational exponent;
};

struct RefineStep {
  Integer left;
  Integer right;
  Integer gcd;
};
using RefineTrace = std::vector<RefineStep>;

class AbsurdNumber {
 public:
  AbsurdNumber() = default;  // zero

  const Rational& coefficient() const noexcept { return coefficient_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }

  bool is_zero() const noexcept { return coefficient_ == 0; }
  bool is_rational() const noexcept { return factors_.empty(); }
  int sign() const noexcept { return sgn(coefficient_); }
  // True if any radicand exceeds the small-prime bound it was built with.
  bool has_large_bases() const noexcept;

  // Structural equality of the canonical representation.
  friend bool operator==(const AbsurdNumber& a, const AbsurdNumber& b) {
    return a.coefficient_ == b.coefficient_ && a.factors_ == b.factors_;
  }

 private:
  AbsurdNumber(Rational coefficient, std::vector<Factor> factors)
      : coefficient_(std::move(coefficient)), factors_(std::move(factors)) {}

  friend AbsurdNumber assemble(Rational, std::span<const Radical>, std::span<const Integer>, RefineTrace*);

  Rational coefficient_;
  std::vector<Factor> factors_;
};

// Normalizes coefficient * prod(base^exponent). `extra_refiners` are integers
// whose gcds with the large radicands should also be split out; they
// contribute nothing to the value. Throws NonPositiveBase for a base < 1.
AbsurdNumber assemble(Rational coefficient, std::span<const Radical> radicals,
                      std::span<const Integer> extra_refiners = {}, RefineTrace* trace = nullptr);

AbsurdNumber from_rational(const Rational& r);
AbsurdNumber from_integer(long n);

// r^alpha for r > 0.
AbsurdNumber normalize_power(const Rational& r, const Rational& alpha);

AbsurdNumber mul(const AbsurdNumber& a, const AbsurdNumber& b);
AbsurdNumber negate(const AbsurdNumber& a);
AbsurdNumber pow(const AbsurdNumber& a, const Rational& alpha);
AbsurdNumber inverse(const AbsurdNumber& a);

// The sum when a and b are commensurate (their ratio is rational), otherwise
// nullopt.
std::optional<AbsurdNumber> add(const AbsurdNumber& a, const AbsurdNumber& b);
bool commensurate(const AbsurdNumber& a, const AbsurdNumber& b);

// Reruns gcd splitting among the large radicands and against the large parts
// of the coefficient. Idempotent on assembled values.
AbsurdNumber coprime_refine(const AbsurdNumber& a, RefineTrace* trace = nullptr);

// Re-expresses every value over one shared coprime basis of all their large
// radicands and coefficient parts. Values without large radicands are
// returned unchanged.
std::vector<AbsurdNumber> rebase_together(std::span<const AbsurdNumber> values, RefineTrace* trace = nullptr);

bool is_zero(const AbsurdNumber& a);
// Value equality. Structural once both sides share a coprime basis.
bool equals(const AbsurdNumber& a, const AbsurdNumber& b);

inline AbsurdNumber operator*(const AbsurdNumber& a, const AbsurdNumber& b) { return mul(a, b); }
inline AbsurdNumber operator-(const AbsurdNumber& a) { return negate(a); }

// Pairwise coprime basis of the given integers (all > 1 entries), by repeated
// gcd splitting. Every input is a product of powers of the result.
std::vector<Integer> coprime_basis(std::span<const Integer> values, RefineTrace* trace = nullptr);

// The part of |n| left after removing all primes up to the current bound.
Integer large_part(const Integer& n);

// Radicals that reproduce the factor list.
std::vector<Radical> radicals_of(const AbsurdNumber& a);

// Describes the first violated representation invariant, if any.
std::optional<std::string> check_invariants(const AbsurdNumber& a);

// "num/den*base^n/d*..." (coefficient always present).
std::string to_canonical_string(const AbsurdNumber& a);
// Inverse of to_canonical_string; rejects non-canonical input.
AbsurdNumber parse_canonical(const std::string& text);

struct Approximation {
  BigFloat value;
  BigFloat error_bound;  // |exact - value| <= error_bound
};

// Approximates a with `precision_bits` of working precision; the bound is
// within about one ulp at that precision.
Approximation eval_approx(const AbsurdNumber& a, mpfr_prec_t precision_bits);

// True if the two enclosures overlap.
bool approx_agree(const Approximation& a, const Approximation& b);

}  // namespace absurd
