#include <doctest.h>

#include "absurd/core.hpp"
#include "absurd/error.hpp"
#include "absurd/expr.hpp"
#include "absurd/fixtures.hpp"
#include "absurd/settings.hpp"
#include "oracle/oracle.hpp"

using namespace absurd;

namespace {

Rational q(const char* s) { return parse_rational(s); }

AbsurdNumber rad(const Rational& r, const char* alpha) { return normalize_power(r, q(alpha)); }

AbsurdNumber value(const char* text) {
  const auto s = simplify(text);
  return s.is_zero() ? AbsurdNumber() : s.terms.at(0);
}

std::string canon(const AbsurdNumber& a) { return to_canonical_string(a); }

}  // namespace

TEST_CASE("from_rational and from_integer") {
  CHECK(canon(from_rational(q("-6/4"))) == "-3/2");
  CHECK(from_rational(0).is_zero());
  CHECK(from_integer(5).is_rational());
  CHECK(is_zero(from_rational(0)));
}

TEST_CASE("normalize_power examples") {
  CHECK(canon(rad(q("28/15"), "2/3")) == "2/15*2^1/3*3^1/3*5^1/3*7^2/3");
  const AbsurdNumber eight = rad(2, "3");
  CHECK(eight.is_rational());
  CHECK(eight.coefficient() == 8);

  const AbsurdNumber big = rad(12345709, "1/2");
  CHECK(big.coefficient() == 1);
  REQUIRE(big.factors().size() == 1);
  CHECK(big.factors()[0].base == 12345709);
  CHECK(big.factors()[0].exponent == q("1/2"));
  CHECK(big.factors()[0].kind == BaseKind::quasi_prime);

  const AbsurdNumber mid = rad(7919, "1/2");
  CHECK(mid.factors().at(0).kind == BaseKind::prime);

  CHECK_THROWS_AS(rad(0, "1/2"), AbsurdError);
  CHECK_THROWS_AS(rad(-2, "1/2"), AbsurdError);
}

TEST_CASE("mul examples") {
  const AbsurdNumber p = mul(rad(30, "1/2"), rad(42, "1/3"));
  CHECK(canon(p) == "1/1*2^5/6*3^5/6*5^1/2*7^1/3");
  const AbsurdNumber x = rad(q("28/15"), "2/3");
  CHECK(mul(x, from_rational(1)) == x);
  const AbsurdNumber two = mul(rad(2, "1/2"), rad(2, "1/2"));
  CHECK(two.is_rational());
  CHECK(two.coefficient() == 2);
}

TEST_CASE("pow examples") {
  const AbsurdNumber x = value("2/15*1470^(1/3)");
  const AbsurdNumber cube = pow(x, 3);
  CHECK(cube.is_rational());
  CHECK(cube.coefficient() == q("784/225"));  // (2/15)^3 * 1470 = 11760/3375
  CHECK(pow(x, 0) == from_rational(1));
  CHECK(pow(from_rational(0), 0) == from_rational(1));
  CHECK(canon(pow(rad(2, "1/2"), -1)) == "1/2*2^1/2");
  CHECK(inverse(rad(2, "1/2")) == pow(rad(2, "1/2"), -1));

  try {
    pow(from_rational(0), -1);
    FAIL("expected an error");
  } catch (const AbsurdError& e) {
    CHECK(e.code() == Errc::ZeroToNegativePower);
  }
  try {
    pow(from_rational(-2), q("1/2"));
    FAIL("expected an error");
  } catch (const AbsurdError& e) {
    CHECK(e.code() == Errc::NegativeBaseFractionalPower);
  }
  CHECK(canon(pow(from_rational(-2), 3)) == "-8/1");
}

TEST_CASE("add examples") {
  const AbsurdNumber a = mul(rad(2, "5/2"), rad(5, "-5/3"));
  const AbsurdNumber b = negate(mul(rad(2, "1/2"), rad(5, "-2/3")));
  const auto sum = add(a, b);
  REQUIRE(sum.has_value());
  CHECK(canon(*sum) == "-1/25*2^1/2*5^1/3");
  CHECK(add(a, negate(a))->is_zero());
  CHECK_FALSE(add(rad(2, "1/2"), rad(3, "1/2")).has_value());
  CHECK_FALSE(commensurate(rad(2, "1/2"), rad(3, "1/2")));
  CHECK(commensurate(rad(8, "1/2"), rad(2, "1/2")));
}

TEST_CASE("add joins different splittings of a large radicand") {
  const AbsurdNumber left = value("sqrt(12345701^2*12345709)");
  const AbsurdNumber right = value("12345701*sqrt(12345709)");
  CHECK(equals(left, right));
  CHECK(add(left, negate(right))->is_zero());
}

TEST_CASE("coprime_refine and rebase") {
  const AbsurdNumber x = rad(12345709, "1/2");
  CHECK(coprime_refine(x) == x);

  const RefineTrace trace = table3_trace();
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].gcd == 12345709);
  CHECK(trace[1].left == Integer("152416333181401"));
  CHECK(trace[1].gcd == 12345701);

  // Small composite coefficient parts take no part in refinement.
  CHECK(coprime_refine(mul(from_rational(6), rad(6, "1/2"))) == mul(from_rational(6), rad(6, "1/2")));

  const Integer v[] = {Integer(12) * 1000003, Integer(18) * 1000003};
  for (const Integer& b : coprime_basis(v)) {
    for (const Integer& c : coprime_basis(v)) {
      if (b != c) CHECK(gcd(b, c) == 1);
    }
  }
}

TEST_CASE("equals and is_zero") {
  std::vector<AbsurdNumber> all;
  for (const auto& e : table1_entries()) all.push_back(value(e.input));
  for (const auto& a : all) {
    for (const auto& b : all) CHECK(equals(a, b));
  }
  CHECK_FALSE(equals(rad(2, "1/2"), rad(2, "1/3")));
  CHECK(is_zero(from_rational(0)));
}

TEST_CASE("eval_approx") {
  const Approximation r = eval_approx(rad(2, "1/2"), 53);
  CHECK(r.value.to_double() == doctest::Approx(1.4142135623730951).epsilon(1e-15));

  const Approximation z = eval_approx(AbsurdNumber(), 64);
  CHECK(mpfr_zero_p(z.value.get()));
  CHECK(mpfr_zero_p(z.error_bound.get()));

  const Approximation first = eval_approx(value(table1_entries()[0].input), 128);
  for (const auto& e : table1_entries()) CHECK(approx_agree(first, eval_approx(value(e.input), 128)));
  CHECK_FALSE(approx_agree(eval_approx(rad(2, "1/2"), 128), eval_approx(rad(2, "1/3"), 128)));
}

TEST_CASE("canonical serialization") {
  const AbsurdNumber x = value("-3*sqrt(2)/7*12345709^(2/5)");
  CHECK(parse_canonical(canon(x)) == x);
  CHECK(canon(AbsurdNumber()) == "0/1");
  CHECK_THROWS_AS(parse_canonical("1/1*4^1/2"), AbsurdError);
  CHECK_THROWS_AS(parse_canonical("1/1*3^1/2*2^1/2"), AbsurdError);
  CHECK_THROWS_AS(parse_canonical("1/1*2^3/2"), AbsurdError);
}

TEST_CASE("invariants hold on a sample") {
  for (const char* text : {"2^(1/2)*3^(2/3)", "12345701^(1/2)*12345709^(1/3)*2", "(1000003*1000033)^(3/7)/1000003"}) {
    CHECK_FALSE(check_invariants(value(text)).has_value());
  }
}

TEST_CASE("field laws against the primal oracle") {
  oracle::Generator g(42);
  auto build = [](const oracle::RawValue& v) { return assemble(v.coef, v.radicals_flat()); };
  for (int i = 0; i < 300; ++i) {
    const AbsurdNumber a = build(g.value()), b = build(g.value()), c = build(g.value());
    CHECK(equals(mul(mul(a, b), c), mul(a, mul(b, c))));
    CHECK(mul(a, b) == mul(b, a));
    const auto ab = add(a, b), ba = add(b, a);
    REQUIRE(ab.has_value() == ba.has_value());
    if (ab) CHECK(equals(*ab, *ba));
    const AbsurdNumber pos = a.sign() < 0 ? negate(a) : a;
    if (!pos.is_zero()) {
      const Rational x = g.exponent(4, 1), y = g.exponent(4, 1);
      CHECK(equals(pow(pow(pos, x), y), pow(pos, x * y)));
      CHECK(oracle::from_absurd(pow(pos, x)) == *oracle::pow(oracle::from_absurd(pos), x));
    }
  }
}

TEST_CASE("settings change the small-prime bound") {
  Settings s = settings();
  s.small_prime_bound = 10;
  ScopedSettings scoped(s);
  const AbsurdNumber x = rad(13 * 17, "1/2");
  REQUIRE(x.factors().size() == 1);
  CHECK(x.factors()[0].base == 221);
  CHECK(x.factors()[0].kind == BaseKind::quasi_prime);
}
