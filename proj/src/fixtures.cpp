#include "absurd/fixtures.hpp"

#include <array>
#include <sstream>

#include "absurd/error.hpp"
#include "absurd/expr.hpp"

namespace absurd {

namespace {

constexpr std::array<Table1Entry, 16> kTable1 = {{
    {1, FormKind::pure_primal, "2^(4/3)*7^(2/3)/(3^(2/3)*5^(2/3))", "2^(4/3)*3^(-2/3)*5^(-2/3)*7^(2/3)"},
    {2, FormKind::proper_primal, "2/15*2^(1/3)*3^(1/3)*5^(1/3)*7^(2/3)", "2/15*2^(1/3)*3^(1/3)*5^(1/3)*7^(2/3)"},
    {3, FormKind::tight_balanced_primal, "14*2^(1/3)*3^(1/3)*5^(1/3)/(15*7^(1/3))",
     "14/15*2^(1/3)*3^(1/3)*5^(1/3)*7^(-1/3)"},
    {4, FormKind::loose_balanced_primal, "2*2^(1/3)*7^(2/3)/(3^(2/3)*5^(2/3))", "2*2^(1/3)*3^(-2/3)*5^(-2/3)*7^(2/3)"},
    {5, FormKind::coprime_sqfree_int_distinct, "2^(4/3)*7^(2/3)/15^(2/3)", "2^(4/3)*7^(2/3)*15^(-2/3)"},
    {6, FormKind::coprime_sqfree_int_proper, "2/15*7^(2/3)*30^(1/3)", "2/15*7^(2/3)*30^(1/3)"},
    {7, FormKind::coprime_sqfree_int_tight, "14*30^(1/3)/(15*7^(1/3))", "14/15*7^(-1/3)*30^(1/3)"},
    {8, FormKind::coprime_sqfree_int_loose, "2*2^(1/3)*7^(2/3)/15^(2/3)", "2*2^(1/3)*7^(2/3)*15^(-2/3)"},
    {9, FormKind::coprime_sqfree_rat_proper, "2*2^(1/3)*(7/15)^(2/3)", "2*2^(1/3)*(7/15)^(2/3)"},
    {10, FormKind::coprime_sqfree_rat_tight, "14/15*(30/7)^(1/3)", "14/15*(30/7)^(1/3)"},
    {11, FormKind::imperfect_single, "(28/15)^(2/3)", "(28/15)^(2/3)"},
    {12, FormKind::imperfect_ratio, "28^(2/3)/15^(2/3)", "15^(-2/3)*28^(2/3)"},
    {13, FormKind::max_reciprocal_single, "(784/225)^(1/3)", "(784/225)^(1/3)"},
    {14, FormKind::max_reciprocal_ratio, "784^(1/3)/225^(1/3)", "225^(-1/3)*784^(1/3)"},
    {15, FormKind::single_min_int_base_proper, "2/15*1470^(1/3)", "2/15*1470^(1/3)"},
    {16, FormKind::single_int_imperfect_base, "1/15*11760^(1/3)", "1/15*11760^(1/3)"},
}};

constexpr const char* kTable3Left = "sqrt(12345701^2*12345709)";
constexpr const char* kTable3Right = "12345701*sqrt(12345709)";

std::string line(bool ok, const std::string& text) { return std::string(ok ? "ok   " : "FAIL ") + text + "\n"; }

AbsurdNumber single_term(const std::string& text) {
  const SumOfAbsurds s = simplify(text);
  if (s.is_zero()) return {};
  if (!s.is_single()) throw AbsurdError(Errc::MultiTermResult, "expected a single term: " + text);
  return s.terms[0];
}

}  // namespace

std::span<const Table1Entry> table1_entries() { return kTable1; }

FixtureResult fixture_table1() {
  FixtureResult out{true, {}};
  std::vector<AbsurdNumber> values;
  for (const auto& e : kTable1) {
    try {
      values.push_back(single_term(e.input));
    } catch (const AbsurdError& err) {
      out.passed = false;
      out.report += line(false, "#" + std::to_string(e.number) + " " + e.input + ": " + err.what());
      return out;
    }
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool same = values[i] == values[0];
    out.passed &= same;
    out.report += line(same, "#" + std::to_string(kTable1[i].number) + " " + kTable1[i].input + " -> " +
                                 to_canonical_string(values[i]));
  }
  for (const auto& e : kTable1) {
    const DisplayForm f = to_form(values[0], e.kind);
    const std::string got = render_text(f);
    const bool ok = got == e.product_form && !check_form(f);
    out.passed &= ok;
    out.report += line(ok, std::string(form_name(e.kind)) + ": " + got + (ok ? "" : " (expected " + std::string(e.product_form) + ")"));
  }
  return out;
}

FixtureResult fixture_table2() {
  FixtureResult out{true, {}};
  int zero = 0, indeterminate = 0;
  for (const auto& a : kTable1) {
    std::string row;
    for (const auto& b : kTable1) {
      const std::string diff = "(" + std::string(a.input) + ") - (" + b.input + ")";
      bool z = false, ind = false;
      try {
        z = simplify(diff).is_zero();
      } catch (const AbsurdError&) {
      }
      try {
        simplify("0/(" + diff + ")");
      } catch (const AbsurdError& err) {
        ind = err.code() == Errc::Indeterminate;
      }
      zero += z;
      indeterminate += ind;
      row += (z && ind) ? '0' : 'x';
    }
    out.report += "#" + std::to_string(a.number) + (a.number < 10 ? "  " : " ") + row + "\n";
  }
  const int total = static_cast<int>(kTable1.size() * kTable1.size());
  out.passed = zero == total && indeterminate == total;
  out.report += line(zero == total, "differences simplified to 0: " + std::to_string(zero) + "/" + std::to_string(total));
  out.report += line(indeterminate == total,
                     "0/difference reported indeterminate: " + std::to_string(indeterminate) + "/" + std::to_string(total));
  return out;
}

RefineTrace table3_trace() {
  const AbsurdNumber pair[] = {single_term(kTable3Left), negate(single_term(kTable3Right))};
  RefineTrace trace;
  rebase_together(pair, &trace);
  return trace;
}

FixtureResult fixture_table3() {
  FixtureResult out{true, {}};
  const std::uint64_t before = factor_full_invocations();
  const SumOfAbsurds s = simplify(std::string(kTable3Left) + " - " + kTable3Right);
  const std::uint64_t calls = factor_full_invocations() - before;
  const RefineTrace trace = table3_trace();

  out.report += line(s.is_zero(), std::string(kTable3Left) + " - " + kTable3Right + " -> " + (s.is_zero() ? "0" : "nonzero"));
  out.report += line(calls == 0, "full factorizations performed: " + std::to_string(calls));
  for (const auto& step : trace) {
    out.report += "     gcd(" + to_string(step.left) + ", " + to_string(step.right) + ") = " + to_string(step.gcd) + "\n";
  }
  const bool chain = trace.size() == 2 && trace[0].gcd == 12345709 && trace[1].left == Integer("152416333181401") &&
                     trace[1].gcd == 12345701;
  out.report += line(chain, "gcd chain: 12345709 splits off 12345701^2, then 12345701");
  out.passed = s.is_zero() && calls == 0 && chain;
  return out;
}

Integer largest_prime_below_pow2(unsigned long bits) {
  if (bits < 2) throw AbsurdError(Errc::InvalidArgument, "need at least 2 bits");
  Integer n;
  mpz_ui_pow_ui(n.get_mpz_t(), 2, bits);
  n -= 1;
  while (!is_probable_prime(n)) n -= 2;
  return n;
}

std::vector<NewtonCase> newton_bench_cases() {
  const PerfectPowerOptions slow{false};
  std::vector<NewtonCase> cases;
  auto run = [&](int number, std::string label, Integer n) {
    NewtonCase c{number, std::move(label), n, max_perfect_power(n, slow), false, {}};
    cases.push_back(std::move(c));
    return &cases.back();
  };

  {
    NewtonCase* c = run(1, "6^210", ipow(6, 210));
    bool ok = c->result.root == 6 && c->result.exponent == 210;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
      int s = 0, f = 0;
      for (const auto& t : c->result.trials) {
        if (t.prime == p) (t.success ? s : f)++;
      }
      ok &= s == 1 && f == 1;
    }
    ok &= c->result.trials.size() == 8;
    c->passed = ok;
    c->detail = "1 success and 1 failure for each of 2, 3, 5, 7";
  }
  {
    NewtonCase* c = run(2, "2^512", ipow(2, 512));
    std::uint64_t twos = 0;
    for (const auto& t : c->result.trials) twos += t.prime == 2 && t.success;
    c->passed = twos == 9 && c->result.successes() == 9 && c->result.root == 2 && c->result.exponent == 512;
    c->detail = "9 successful square roots";
  }
  {
    const Integer p = largest_prime_below_pow2(256);
    NewtonCase* c = run(3, "p^2, p = 2^256-" + to_string(Integer((Integer(1) << 256) - p)), p * p);
    const auto& tr = c->result.trials;
    bool ok = !tr.empty() && tr[0].success && tr[0].prime == 2 && c->result.successes() == 1;
    c->passed = ok && c->result.root == p && c->result.exponent == 2;
    c->detail = "1 success then failures only";
  }
  {
    NewtonCase* c = run(4, "2^509", ipow(2, 509));
    bool ok = c->result.successes() == 1 && c->result.root == 2 && c->result.exponent == 509;
    for (const auto& t : c->result.trials) ok &= !t.success || t.prime == 509;
    c->passed = ok;
    c->detail = "succeeds only at prime 509";
  }
  {
    const Integer p = largest_prime_below_pow2(512);
    NewtonCase* c = run(5, "2^512-" + to_string(Integer((Integer(1) << 512) - p)), p);
    c->passed = c->result.exponent == 1 && c->result.successes() == 0 && c->result.root == p;
    c->detail = "exponent 1";
  }
  return cases;
}

FixtureResult fixture_newton_bench() {
  FixtureResult out{true, {}};
  for (const auto& c : newton_bench_cases()) {
    std::ostringstream os;
    os << "case " << c.number << " " << c.label << ": root bits " << mpz_sizeinbase(c.result.root.get_mpz_t(), 2)
       << ", exponent " << c.result.exponent << ", applications " << c.result.newton_applications << " ("
       << c.result.successes() << " successes, " << c.result.failures() << " failures); " << c.detail;
    out.report += line(c.passed, os.str());
    out.passed &= c.passed;
  }
  return out;
}

}  // namespace absurd
