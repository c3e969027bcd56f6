#pragma once

// Integer and rational primitives: gcds of fractions, exact k-th roots by
// integer Newton iteration, maximal perfect-power decomposition, and bounded
// or budgeted factorization.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace absurd {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& n);
std::string to_string(const Rational& r);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
bool is_integer(const Rational& r);

// Exact powers. Throws AbsurdError(Overflow) if the result would exceed a
// sanity limit on bit length.
Integer ipow(const Integer& base, unsigned long exponent);
Rational rpow(const Rational& base, long exponent);

// Converts an exponent-sized integer; throws AbsurdError(Overflow) if it
// does not fit in a long.
long to_long(const Integer& n);

// gcd(num(a), num(b)) / lcm(den(a), den(b)) for positive a, b.
Rational gcd_rational(const Rational& a, const Rational& b);

// Primes in increasing order, covering at least [2, limit]; callers stop at
// their own bound. The vector is shared and immutable.
std::shared_ptr<const std::vector<unsigned long>> primes_up_to(unsigned long limit);

bool is_probable_prime(const Integer& n);

// Counts Newton root applications. One application is one call of the
// root extractor for a single (n, k), however many iterations it takes.
struct NewtonCounter {
  std::uint64_t applications = 0;
};

// floor(n^(1/k)) for n >= 0, k >= 1, by integer Newton iteration from a guess
// of about ceil(bits(n)/k) bits: a floating-point upper estimate, or
// 2^ceil(bits(n)/k) when that estimate is not above the root.
Integer floor_root(const Integer& n, unsigned long k, NewtonCounter* counter = nullptr);

// m with m^k == n, or nullopt. n >= 0, k >= 1.
std::optional<Integer> integer_nth_root(const Integer& n, unsigned long k,
                                        NewtonCounter* counter = nullptr);

struct RootTrial {
  unsigned long prime;
  bool success;
};

struct PerfectPowerDecomposition {
  Integer root;
  Integer exponent;  // maximal k with root^k == n
  std::uint64_t newton_applications = 0;
  std::vector<RootTrial> trials;  // every Newton application, in order

  std::uint64_t successes() const;
  std::uint64_t failures() const;
};

struct PerfectPowerOptions {
  // Return (n, 1) at once for probable primes, and skip the Newton
  // application for primes p ruled out by p-th power residues mod small
  // primes q = 1 (mod p). Disable to count every application.
  bool prime_fast_path = true;
};

// Maximal perfect-power decomposition of n >= 2. Tries successive primes p,
// repeating each prime until it fails, and stops once 2^p exceeds the current
// root.
PerfectPowerDecomposition max_perfect_power(const Integer& n,
                                            const PerfectPowerOptions& opts = {});

// Restricted variant: only primes that divide `allowed_exponent` are tried.
PerfectPowerDecomposition max_perfect_power_restricted(const Integer& n,
                                                       const Integer& allowed_exponent,
                                                       const PerfectPowerOptions& opts = {});

struct RationalPerfectPower {
  Rational root;
  Integer exponent;
  std::uint64_t newton_applications = 0;
};

// (root, k) with root^k == r and k maximal; r > 0, r != 1.
RationalPerfectPower max_perfect_power_rational(const Rational& r,
                                                const PerfectPowerOptions& opts = {});

// s with s^d == r exactly, or nullopt. One Newton application per side.
std::optional<Rational> exact_rational_root(const Rational& r, unsigned long d,
                                            NewtonCounter* counter = nullptr);

struct ReciprocalPower {
  Rational base;
  Integer inverse_exponent;  // value == base^(1/inverse_exponent)
};

// Rewrites r^exponent (exponent > 0, reduced n/d) as base^(1/m) with the
// largest possible unit-fraction exponent: finds the largest divisor d' of d
// with r a perfect d'-th power, then base = (r^(1/d'))^n and m = d/d'.
ReciprocalPower max_reciprocal_root(const Rational& r, const Rational& exponent);

struct PrimePower {
  Integer prime;
  unsigned long multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct BoundedFactorization {
  std::vector<PrimePower> small_factors;  // primes <= bound, increasing
  Integer cofactor;                       // no prime factor <= bound
};

// Trial division of n >= 1 by every prime up to `bound`.
BoundedFactorization factor_bounded(const Integer& n, unsigned long bound);

// Complete factorization of n >= 1 by trial division, perfect-power
// detection and Pollard rho (Brent). Returns nullopt when more than `budget`
// rho iterations would be needed.
std::optional<std::vector<PrimePower>> factor_full(const Integer& n, std::uint64_t budget);

// Number of factor_full calls made by this process.
std::uint64_t factor_full_invocations() noexcept;

}  // namespace absurd
