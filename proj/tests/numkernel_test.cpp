#include <doctest.h>

#include "absurd/error.hpp"
#include "absurd/fixtures.hpp"
#include "absurd/numkernel.hpp"

using namespace absurd;

namespace {

Rational q(const char* s) { return parse_rational(s); }

Integer product(const std::vector<PrimePower>& f) {
  Integer n = 1;
  for (const auto& pp : f) n *= ipow(pp.prime, pp.multiplicity);
  return n;
}

// x^k, capped at 2^64 - 1.
unsigned long saturating_pow(unsigned long x, unsigned k) {
  unsigned __int128 r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r *= x;
    if (r > ~0UL) return ~0UL;
  }
  return static_cast<unsigned long>(r);
}

}  // namespace

TEST_CASE("gcd_rational examples") {
  CHECK(gcd_rational(q("4/3"), q("2/3")) == q("2/3"));
  CHECK(gcd_rational(q("24/5"), q("3/5")) == q("3/5"));
  CHECK(gcd_rational(q("1/2"), q("1/3")) == q("1/6"));
}

TEST_CASE("gcd_rational is the largest common divisor on a fraction grid") {
  std::vector<Rational> grid;
  for (int n = 1; n <= 12; ++n) {
    for (int d = 1; d <= 12; ++d) grid.push_back(make_rational(n, d));
  }
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      const Rational g = gcd_rational(a, b);
      const Rational qa = a / g, qb = b / g;
      REQUIRE(is_integer(qa));
      REQUIRE(is_integer(qb));
      // Every common divisor is a/m for an integer m; the smallest m that
      // also divides b gives the largest one.
      const long limit = qa.get_num().get_si();
      Rational best;
      for (long m = 1; m <= limit; ++m) {
        if (is_integer(Rational(b / (a / m)))) {
          best = a / m;
          break;
        }
      }
      CHECK(g == best);
    }
  }
}

TEST_CASE("integer_nth_root examples") {
  CHECK_FALSE(integer_nth_root(1470, 3).has_value());
  CHECK(integer_nth_root(784, 2) == Integer(28));
  CHECK(integer_nth_root(ipow(2, 512), 2) == ipow(2, 256));
  CHECK(integer_nth_root(0, 3) == Integer(0));
  CHECK(integer_nth_root(1, 7) == Integer(1));
}

TEST_CASE("integer_nth_root exhaustive for n <= 10^6, k <= 20") {
  // Perfect powers in range, then every (n, k) against that table.
  constexpr long kMax = 1'000'000;
  std::vector<std::vector<char>> perfect(21, std::vector<char>(kMax + 1, 0));
  for (unsigned k = 2; k <= 20; ++k) {
    for (long m = 1;; ++m) {
      const Integer p = ipow(m, k);
      if (p > kMax) break;
      perfect[k][p.get_si()] = 1;
    }
  }
  long mismatches = 0;
  for (unsigned k = 2; k <= 20; ++k) {
    for (long n = 2; n <= kMax; ++n) {
      const Integer nn(n);
      const unsigned long x = floor_root(nn, k).get_ui();
      if (saturating_pow(x, k) > static_cast<unsigned long>(n) || saturating_pow(x + 1, k) <= static_cast<unsigned long>(n)) {
        ++mismatches;
      }
      const bool has = integer_nth_root(nn, k).has_value();
      if (has != static_cast<bool>(perfect[k][n])) ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("floor_root brackets large inputs") {
  Integer n = ipow(3, 300) + 12345;
  for (unsigned long k : {2UL, 3UL, 5UL, 17UL, 101UL}) {
    const Integer x = floor_root(n, k);
    CHECK(ipow(x, k) <= n);
    CHECK(ipow(x + 1, k) > n);
  }
}

TEST_CASE("max_perfect_power examples") {
  const PerfectPowerOptions slow{false};
  const auto a = max_perfect_power(ipow(6, 210), slow);
  CHECK(a.root == 6);
  CHECK(a.exponent == 210);
  const auto b = max_perfect_power(ipow(2, 512), slow);
  CHECK(b.root == 2);
  CHECK(b.exponent == 512);
  CHECK(b.successes() == 9);
  const auto c = max_perfect_power(11760);
  CHECK(c.root == 11760);
  CHECK(c.exponent == 1);
}

TEST_CASE("max_perfect_power reconstructs and is maximal") {
  for (long n = 2; n <= 5000; ++n) {
    const auto d = max_perfect_power(n);
    REQUIRE(ipow(d.root, d.exponent.get_ui()) == n);
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL}) {
      if ((Integer(1) << p) <= d.root) CHECK_FALSE(integer_nth_root(d.root, p).has_value());
    }
  }
  CHECK(max_perfect_power(ipow(12, 35) * 1).exponent == 35);
  CHECK(max_perfect_power(ipow(1000003, 6)).root == 1000003);
}

TEST_CASE("max_perfect_power: fast path agrees with slow path") {
  const PerfectPowerOptions slow{false};
  for (const Integer& n : std::vector<Integer>{1000003, ipow(1000003, 4), largest_prime_below_pow2(128), Integer(Integer(999983) * 999983)}) {
    const auto fast = max_perfect_power(n);
    const auto full = max_perfect_power(n, slow);
    CHECK(fast.root == full.root);
    CHECK(fast.exponent == full.exponent);
  }
}

TEST_CASE("max_perfect_power_rational examples") {
  auto a = max_perfect_power_rational(q("784/225"));
  CHECK(a.root == q("28/15"));
  CHECK(a.exponent == 2);
  auto b = max_perfect_power_rational(q("576/25"));
  CHECK(b.root == q("24/5"));
  CHECK(b.exponent == 2);
  auto c = max_perfect_power_rational(q("28/15"));
  CHECK(c.root == q("28/15"));
  CHECK(c.exponent == 1);
  auto d = max_perfect_power_rational(q("1/64"));
  CHECK(d.root == q("1/2"));
  CHECK(d.exponent == 6);
  auto e = max_perfect_power_rational(q("256/81"));
  CHECK(e.root == q("4/3"));
  CHECK(e.exponent == 4);
}

TEST_CASE("exact_rational_root examples") {
  CHECK(exact_rational_root(q("8/27"), 3) == q("2/3"));
  CHECK_FALSE(exact_rational_root(q("8/27"), 2).has_value());
  CHECK(exact_rational_root(Rational(Integer(12345701) * 12345701), 2) == Rational(12345701));
}

TEST_CASE("max_reciprocal_root examples") {
  auto a = max_reciprocal_root(q("9/4"), q("1/4"));
  CHECK(a.base == q("3/2"));
  CHECK(a.inverse_exponent == 2);
  auto b = max_reciprocal_root(Rational(ipow(29, 31)) / 2, q("1/10"));
  CHECK(b.base == q("2159424054808578564166497528588784562372597429/2"));
  CHECK(b.inverse_exponent == 10);
  auto c = max_reciprocal_root(q("256/81"), q("1/4"));
  CHECK(c.base == q("4/3"));
  CHECK(c.inverse_exponent == 1);
}

TEST_CASE("factor_bounded examples and reconstruction") {
  const auto a = factor_bounded(11760, 1000);
  CHECK(a.small_factors == std::vector<PrimePower>{{2, 4}, {3, 1}, {5, 1}, {7, 2}});
  CHECK(a.cofactor == 1);

  const Integer big = Integer(12345701) * 12345701 * 12345709;
  const auto b = factor_bounded(big, 1000);
  CHECK(b.small_factors.empty());
  CHECK(b.cofactor == big);

  const auto c = factor_bounded(1, 1000);
  CHECK(c.small_factors.empty());
  CHECK(c.cofactor == 1);

  const auto primes = primes_up_to(1000);
  for (long n = 1; n <= 3000; n += 7) {
    const Integer m = Integer(n) * 1000003 * 997;
    const auto f = factor_bounded(m, 1000);
    CHECK(product(f.small_factors) * f.cofactor == m);
    for (unsigned long p : *primes) {
      if (p > 1000) break;
      CHECK(f.cofactor % p != 0);
    }
  }
}

TEST_CASE("factor_full") {
  CHECK(factor_full(1470, 1'000'000) == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}, {7, 2}});
  CHECK(factor_full(2910600, 1'000'000) == std::vector<PrimePower>{{2, 3}, {3, 3}, {5, 2}, {7, 2}, {11, 1}});
  CHECK(factor_full(Integer(12345701) * 12345701 * 12345709, 1'000'000) ==
        std::vector<PrimePower>{{12345701, 2}, {12345709, 1}});

  const Integer p("100000000000000000000000000319");
  const Integer r("100000000000000000000000000379");
  REQUIRE(is_probable_prime(p));
  REQUIRE(is_probable_prime(r));
  CHECK_FALSE(factor_full(p * r, 1).has_value());

  const std::uint64_t before = factor_full_invocations();
  factor_full(10, 10);
  CHECK(factor_full_invocations() == before + 1);
}

TEST_CASE("rational helpers") {
  CHECK(parse_rational("-6/4") == q("-3/2"));
  CHECK(to_string(q("-3/2")) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(floor(q("-3/2")) == -2);
  CHECK(ceil(q("-3/2")) == -1);
  CHECK(rpow(q("2/3"), -2) == q("9/4"));
  CHECK_THROWS_AS(ipow(2, 1UL << 40), AbsurdError);
}
