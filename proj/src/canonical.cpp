#include <sstream>

#include "absurd/core.hpp"
#include "absurd/error.hpp"
#include "absurd/settings.hpp"

namespace absurd {

std::optional<std::string> check_invariants(const AbsurdNumber& a) {
  const Rational& c = a.coefficient();
  const auto& fs = a.factors();
  if (c.get_den() <= 0) return "coefficient denominator not positive";
  if (c == 0) {
    if (!fs.empty()) return "zero with radicals";
    return std::nullopt;
  }
  const unsigned long bound = settings().small_prime_bound;
  const Integer bound_sq = Integer(bound) * bound;
  Integer g;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const Factor& f = fs[i];
    const std::string where = "factor " + f.base.get_str() + ": ";
    if (f.base < 2) return where + "base below 2";
    if (f.exponent <= 0 || f.exponent >= 1) return where + "exponent outside (0,1)";
    if (i > 0 && fs[i - 1].base >= f.base) return where + "bases not strictly increasing";
    for (std::size_t j = 0; j < i; ++j) {
      mpz_gcd(g.get_mpz_t(), fs[j].base.get_mpz_t(), f.base.get_mpz_t());
      if (g != 1) return where + "not coprime to " + fs[j].base.get_str();
    }
    if (f.base <= bound_sq) {
      if (f.kind != BaseKind::prime) return where + "small base tagged quasi-prime";
      if (!is_probable_prime(f.base)) return where + "small base not prime";
      continue;
    }
    if (f.kind != BaseKind::quasi_prime) return where + "large base tagged prime";
    if (factor_bounded(f.base, bound).cofactor != f.base) return where + "quasi-prime has a small factor";
    if (max_perfect_power(f.base).exponent != 1) return where + "quasi-prime is a perfect power";
    for (const Integer* side : {&c.get_num(), &c.get_den()}) {
      Integer rest = abs(*side);
      while (mpz_divisible_p(rest.get_mpz_t(), f.base.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), f.base.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), f.base.get_mpz_t());
      if (g != 1) return where + "shares a proper factor with the coefficient";
    }
  }
  return std::nullopt;
}

std::string to_canonical_string(const AbsurdNumber& a) {
  const Rational& c = a.coefficient();
  std::string out = c.get_num().get_str() + "/" + c.get_den().get_str();
  for (const auto& f : a.factors()) {
    out += "*" + f.base.get_str() + "^" + f.exponent.get_num().get_str() + "/" + f.exponent.get_den().get_str();
  }
  return out;
}

AbsurdNumber parse_canonical(const std::string& text) {
  auto fail = [&](const std::string& why) {
    return AbsurdError(Errc::InvalidArgument, "not a canonical absurd number (" + why + "): " + text);
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, '*');) parts.push_back(part);
  if (parts.empty()) throw fail("empty");

  Rational coefficient;
  std::vector<Radical> radicals;
  try {
    if (parts[0].find('/') == std::string::npos) throw fail("coefficient needs num/den");
    coefficient = parse_rational(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      const auto caret = parts[i].find('^');
      if (caret == std::string::npos) throw fail("missing exponent");
      radicals.push_back({Integer(parts[i].substr(0, caret)), parse_rational(parts[i].substr(caret + 1))});
    }
  } catch (const AbsurdError&) {
    throw;
  } catch (const std::exception&) {
    throw fail("malformed number");
  }
  AbsurdNumber value = assemble(coefficient, radicals);
  if (to_canonical_string(value) != text) throw fail("not in normal form");
  return value;
}

}  // namespace absurd
