#pragma once

// Randomized suites shared by the property tests and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

struct SuiteResult {
  long checked = 0;
  long skipped = 0;  // cases outside the suite's scope (unsupported operations)
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && checked > 0; }
  void fail(std::string message);
  std::string summary() const;
};

// Normalizing value-preserving rewrites of random inputs gives the same
// representation (structurally when at most one radicand atom exceeds the
// small-prime bound, by value otherwise).
SuiteResult canonicality_suite(std::uint64_t seed, long cases);

// Random mul / pow / add / negate / inverse / equals against the primal
// oracle and a high-precision MPFR evaluation, checking invariants after
// every operation.
SuiteResult arithmetic_suite(std::uint64_t seed, long cases);

// Random expression trees (at most 6 nodes, radicands at most 100) against
// direct MPFR evaluation, plus distributivity identities. Also checks that
// the terms of every simplified sum are pairwise incommensurate.
SuiteResult expression_suite(std::uint64_t seed, long cases);

// Parsing the rendering of every display form (both layouts) gives back an
// equal value; covers the reference table values, random values and sums.
SuiteResult roundtrip_suite(std::uint64_t seed, long cases);

}  // namespace oracle
