#include <algorithm>
#include <mutex>

#include "absurd/error.hpp"
#include "absurd/numkernel.hpp"

namespace absurd {

namespace {

// Largest intermediate we are willing to materialize (bits).
constexpr unsigned long kMaxBits = 1UL << 26;

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw AbsurdError(Errc::DivisionByZero, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw AbsurdError(Errc::InvalidArgument, "not a rational number: '" + text + "'");
  }
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw AbsurdError(Errc::Overflow, "exponent out of range: " + n.get_str());
  return n.get_si();
}

Integer ipow(const Integer& base, unsigned long exponent) {
  if (exponent == 0) return 1;
  Integer mag = abs(base);
  if (mag > 1) {
    const unsigned long bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
    if (exponent > kMaxBits || (bits - 1) * exponent > kMaxBits) {
      throw AbsurdError(Errc::Overflow, "power too large to expand");
    }
  }
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rational rpow(const Rational& base, long exponent) {
  if (exponent == 0) return 1;
  if (exponent < 0) {
    if (base == 0) throw AbsurdError(Errc::ZeroToNegativePower, "0 raised to a negative power");
    const unsigned long e = static_cast<unsigned long>(-(exponent + 1)) + 1;
    return make_rational(ipow(base.get_den(), e), ipow(base.get_num(), e));
  }
  const auto e = static_cast<unsigned long>(exponent);
  Rational out(ipow(base.get_num(), e), ipow(base.get_den(), e));
  return out;  // already reduced: powers of coprime integers stay coprime
}

Rational gcd_rational(const Rational& a, const Rational& b) {
  if (a <= 0 || b <= 0) throw AbsurdError(Errc::InvalidArgument, "gcd_rational needs positive arguments");
  Integer g, l;
  mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  return make_rational(g, l);
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::shared_ptr<const std::vector<unsigned long>> primes_up_to(unsigned long limit) {
  static std::mutex mu;
  static std::shared_ptr<const std::vector<unsigned long>> cache;
  static unsigned long cached_limit = 0;

  std::lock_guard<std::mutex> lock(mu);
  if (!cache || cached_limit < limit) {
    const unsigned long n = std::max(limit, std::max(2 * cached_limit, 1UL << 16));
    std::vector<bool> composite(n + 1, false);
    auto primes = std::make_shared<std::vector<unsigned long>>();
    for (unsigned long i = 2; i <= n; ++i) {
      if (composite[i]) continue;
      primes->push_back(i);
      for (unsigned long j = i * i; j <= n && i <= n / i; j += i) composite[j] = true;
    }
    cache = std::move(primes);
    cached_limit = n;
  }
  return cache;
}

}  // namespace absurd
