#pragma once

// Reference computations: the sixteen equivalent inputs and their display
// forms, the pairwise difference matrix, the large-prime cancellation, and
// Newton-iteration counts for extreme perfect-power inputs.

#include <span>
#include <string>
#include <vector>

#include "absurd/core.hpp"
#include "absurd/forms.hpp"

namespace absurd {

struct Table1Entry {
  int number;
  FormKind kind;
  const char* input;         // expression text
  const char* product_form;  // expected render_text of `kind` in product layout
};

std::span<const Table1Entry> table1_entries();

struct FixtureResult {
  bool passed = false;
  std::string report;  // one line per check
};

FixtureResult fixture_table1();
FixtureResult fixture_table2();
FixtureResult fixture_table3();
FixtureResult fixture_newton_bench();

// Largest prime below 2^bits (bits >= 2).
Integer largest_prime_below_pow2(unsigned long bits);

struct NewtonCase {
  int number;
  std::string label;
  Integer input;
  PerfectPowerDecomposition result;
  bool passed = false;
  std::string detail;
};

// Runs the five extreme cases with the probable-prime fast path disabled.
std::vector<NewtonCase> newton_bench_cases();

// The gcd splits performed when the two table3 fixture terms are put over a shared
// basis.
RefineTrace table3_trace();

}  // namespace absurd
