#include <algorithm>
#include <map>

#include "absurd/core.hpp"
#include "absurd/error.hpp"
#include "absurd/settings.hpp"

namespace absurd {

namespace {

// Multiplicity of the basis element b in n; divides it out of n.
unsigned long strip(Integer& n, const Integer& b) {
  unsigned long v = 0;
  while (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t());
    ++v;
  }
  return v;
}

BaseKind classify(const Integer& base, unsigned long bound) {
  if (base <= bound) return BaseKind::prime;
  // No prime factor <= bound and at most bound^2: necessarily prime.
  return base <= Integer(bound) * bound ? BaseKind::prime : BaseKind::quasi_prime;
}

}  // namespace

bool AbsurdNumber::has_large_bases() const noexcept {
  const unsigned long bound = settings().small_prime_bound;
  return std::any_of(factors_.begin(), factors_.end(), [&](const Factor& f) { return f.base > bound; });
}

AbsurdNumber assemble(Rational coefficient, std::span<const Radical> radicals,
                      std::span<const Integer> extra_refiners, RefineTrace* trace) {
  for (const auto& r : radicals) {
    if (r.base < 1) throw AbsurdError(Errc::NonPositiveBase, "radicand must be positive, got " + r.base.get_str());
  }
  if (coefficient == 0) return {};

  const Settings& cfg = settings();
  const unsigned long bound = cfg.small_prime_bound;

  std::map<Integer, Rational> exponents;  // prime or basis root -> total exponent
  std::vector<std::pair<Integer, Rational>> large;
  for (const auto& r : radicals) {
    if (r.exponent == 0 || r.base == 1) continue;
    if (is_integer(r.exponent)) {
      coefficient *= rpow(Rational(r.base), to_long(r.exponent.get_num()));
      continue;
    }
    auto split = factor_bounded(r.base, bound);
    for (const auto& f : split.small_factors) exponents[f.prime] += r.exponent * f.multiplicity;
    if (split.cofactor > 1) large.emplace_back(std::move(split.cofactor), r.exponent);
  }

  if (!large.empty()) {
    std::vector<Integer> pool;
    pool.reserve(large.size() + extra_refiners.size() + 2);
    for (const auto& [base, e] : large) pool.push_back(base);
    pool.push_back(large_part(coefficient.get_num()));
    pool.push_back(large_part(coefficient.get_den()));
    pool.insert(pool.end(), extra_refiners.begin(), extra_refiners.end());
    const std::vector<Integer> basis = coprime_basis(pool, trace);

    std::map<Integer, Rational> over_basis;
    Integer g;
    for (auto& [base, e] : large) {
      Integer rest = base;
      for (const auto& b : basis) {
        if (rest == 1) break;
        mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), b.get_mpz_t());
        if (g == 1) continue;
        over_basis[b] += e * strip(rest, b);
      }
    }
    const PerfectPowerOptions pp_opts{cfg.prime_fast_path};
    for (auto& [b, e] : over_basis) {
      if (e == 0) continue;
      auto pp = max_perfect_power(b, pp_opts);
      exponents[pp.root] += e * Rational(pp.exponent);
    }
  }

  std::vector<Factor> factors;
  for (auto& [base, e] : exponents) {
    if (e == 0) continue;
    const Integer whole = floor(e);
    if (whole != 0) coefficient *= rpow(Rational(base), to_long(whole));
    Rational frac = e - Rational(whole);
    if (frac != 0) factors.push_back({base, std::move(frac), classify(base, bound)});
  }
  // std::map iteration already yields increasing bases.
  return AbsurdNumber(std::move(coefficient), std::move(factors));
}

std::vector<Radical> radicals_of(const AbsurdNumber& a) {
  std::vector<Radical> out;
  out.reserve(a.factors().size());
  for (const auto& f : a.factors()) out.push_back({f.base, f.exponent});
  return out;
}

AbsurdNumber from_rational(const Rational& r) { return assemble(r, {}); }

AbsurdNumber from_integer(long n) { return from_rational(Rational(n)); }

AbsurdNumber normalize_power(const Rational& r, const Rational& alpha) {
  if (r <= 0) throw AbsurdError(Errc::NonPositiveBase, "base must be positive, got " + to_string(r));
  const Radical parts[] = {{r.get_num(), alpha}, {r.get_den(), -alpha}};
  return assemble(1, parts);
}

AbsurdNumber mul(const AbsurdNumber& a, const AbsurdNumber& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_rational()) return assemble(a.coefficient() * b.coefficient(), radicals_of(a));
  if (a.is_rational()) return assemble(a.coefficient() * b.coefficient(), radicals_of(b));
  auto radicals = radicals_of(a);
  const auto more = radicals_of(b);
  radicals.insert(radicals.end(), more.begin(), more.end());
  return assemble(a.coefficient() * b.coefficient(), radicals);
}

AbsurdNumber negate(const AbsurdNumber& a) { return assemble(-a.coefficient(), radicals_of(a)); }

AbsurdNumber pow(const AbsurdNumber& a, const Rational& alpha) {
  if (alpha == 0) return from_integer(1);  // including 0^0
  if (a.is_zero()) {
    if (alpha < 0) throw AbsurdError(Errc::ZeroToNegativePower, "0 raised to a negative power");
    return {};
  }
  std::vector<Radical> radicals;
  for (const auto& f : a.factors()) radicals.push_back({f.base, f.exponent * alpha});

  const Rational& c = a.coefficient();
  if (is_integer(alpha)) return assemble(rpow(c, to_long(alpha.get_num())), radicals);
  if (c < 0) {
    throw AbsurdError(Errc::NegativeBaseFractionalPower,
                      "fractional power " + to_string(alpha) + " of a negative number");
  }
  radicals.push_back({c.get_num(), alpha});
  radicals.push_back({c.get_den(), -alpha});
  return assemble(1, radicals);
}

AbsurdNumber inverse(const AbsurdNumber& a) { return pow(a, -1); }

std::optional<AbsurdNumber> add(const AbsurdNumber& a, const AbsurdNumber& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.factors() == b.factors()) {
    return assemble(a.coefficient() + b.coefficient(), radicals_of(a));
  }
  if (!a.has_large_bases() && !b.has_large_bases()) return std::nullopt;

  // Large radicands may be written over different coprime pieces; compare
  // them over a shared basis.
  const AbsurdNumber pair[] = {a, b};
  const auto rebased = rebase_together(pair);
  if (rebased[0].factors() != rebased[1].factors()) return std::nullopt;
  return assemble(rebased[0].coefficient() + rebased[1].coefficient(), radicals_of(rebased[0]));
}

bool commensurate(const AbsurdNumber& a, const AbsurdNumber& b) {
  if (a.is_zero() || b.is_zero() || a.factors() == b.factors()) return true;
  if (!a.has_large_bases() && !b.has_large_bases()) return false;
  const AbsurdNumber pair[] = {a, b};
  const auto rebased = rebase_together(pair);
  return rebased[0].factors() == rebased[1].factors();
}

bool is_zero(const AbsurdNumber& a) { return a.is_zero(); }

bool equals(const AbsurdNumber& a, const AbsurdNumber& b) {
  if (a == b) return true;
  if (a.coefficient() == 0 || b.coefficient() == 0) return false;
  if (!a.has_large_bases() && !b.has_large_bases()) return false;
  const AbsurdNumber pair[] = {a, b};
  const auto rebased = rebase_together(pair);
  return rebased[0] == rebased[1];
}

}  // namespace absurd
