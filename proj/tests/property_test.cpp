#include <doctest.h>

#include "oracle/suites.hpp"

// The 10,000-case canonicality and arithmetic runs live in the acceptance
// binary; these use other seeds so the two together widen coverage.

TEST_CASE("canonicality under value-preserving rewrites") {
  const auto r = oracle::canonicality_suite(1, 3000);
  INFO(r.summary());
  CHECK(r.passed());
}

TEST_CASE("arithmetic against the primal and MPFR oracles") {
  const auto r = oracle::arithmetic_suite(2, 3000);
  INFO(r.summary());
  CHECK(r.passed());
}

TEST_CASE("random expressions against direct MPFR evaluation") {
  const auto r = oracle::expression_suite(3, 5000);
  INFO(r.summary());
  CHECK(r.passed());
  CHECK(r.checked > 3000);
}

TEST_CASE("rendering round trip over random values and sums") {
  const auto r = oracle::roundtrip_suite(4, 200);
  INFO(r.summary());
  CHECK(r.passed());
}
