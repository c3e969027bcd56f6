#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "absurd/error.hpp"
#include "absurd/numkernel.hpp"

namespace absurd {

namespace {

std::size_t bit_length(const Integer& n) { return mpz_sizeinbase(n.get_mpz_t(), 2); }

// Distinct prime divisors of a small positive integer, increasing.
std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned long to_ulong(const Integer& n) {
  if (n < 0 || !n.fits_ulong_p()) throw AbsurdError(Errc::Overflow, "exponent out of range: " + n.get_str());
  return n.get_ui();
}

// Above this size a primality test costs more than the residue-filtered
// root trials it would save.
bool worth_primality_test(const Integer& n) { return bit_length(n) <= 4096; }

bool small_prime(unsigned long q) {
  for (unsigned long d = 2; d <= q / d; ++d) {
    if (q % d == 0) return false;
  }
  return q > 1;
}

unsigned long powmod(unsigned long b, unsigned long e, unsigned long m) {
  unsigned __int128 r = 1, x = b % m;
  for (; e; e >>= 1) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
  }
  return static_cast<unsigned long>(r);
}

std::uint64_t wrapping_pow(std::uint64_t x, unsigned long e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1) {
    if (e & 1) r *= x;
    x *= x;
  }
  return r;
}

// The 64 bits of n starting at bit `shift`.
std::uint64_t odd_part_low_bits(const Integer& n, mp_bitcnt_t shift) {
  const mp_size_t limb = static_cast<mp_size_t>(shift / 64);
  const unsigned offset = shift % 64;
  const std::uint64_t a = mpz_getlimbn(n.get_mpz_t(), limb);
  if (offset == 0) return a;
  const std::uint64_t b = static_cast<std::size_t>(limb + 1) < mpz_size(n.get_mpz_t()) ? mpz_getlimbn(n.get_mpz_t(), limb + 1) : 0;
  return (a >> offset) | (b << (64 - offset));
}

// False when n is certainly not a p-th power. For a root of at most 40 bits
// a double estimate leaves at most two candidates, compared with n modulo
// 2^64; otherwise, for primes q = 1 mod p, a p-th power reduces to 0 or to a
// p-th power residue mod q.
bool may_be_pth_power(const Integer& n, unsigned long p) {
  if (bit_length(n) / p + 1 <= 40) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    const double est = std::exp2((std::log2(m) + static_cast<double>(e)) / static_cast<double>(p));
    const auto lo = static_cast<std::uint64_t>(std::max(1.0, std::floor(est - 0.05)));
    const auto hi = static_cast<std::uint64_t>(std::ceil(est + 0.05));
    // Compare odd parts: x^p = n forces the 2-adic valuations to match.
    const mp_bitcnt_t zeros = mpz_scan1(n.get_mpz_t(), 0);
    if (zeros % p != 0) return false;
    const std::uint64_t low = odd_part_low_bits(n, zeros);
    for (std::uint64_t x = lo; x <= hi; ++x) {
      const int xz = std::countr_zero(x);
      if (static_cast<mp_bitcnt_t>(xz) * p == zeros && wrapping_pow(x >> xz, p) == low) return true;
    }
    return false;
  }
  int tested = 0;
  for (unsigned long m = 2; tested < 4 && m < 400; m += 2) {
    const unsigned long q = m * p + 1;
    if (q > (1UL << 40)) break;
    if (!small_prime(q)) continue;
    ++tested;
    const unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), q);
    if (r != 0 && powmod(r, m, q) != 1) return false;
  }
  return true;
}

// An upper bound on n^(1/k) from a floating-point estimate, close enough
// that Newton descends quadratically from the first step; nullopt if the
// estimate cannot be trusted.
std::optional<Integer> estimated_root(const Integer& n, unsigned long k) {
  long e = 0;
  const double m = mpz_get_d_2exp(&e, n.get_mpz_t());
  const double lg = (std::log2(m) + static_cast<double>(e)) / static_cast<double>(k);
  const double bound = lg + 0x1p-30 + lg * 0x1p-45;
  Integer x;
  if (bound < 60) {
    x = static_cast<unsigned long>(std::ceil(std::exp2(bound))) + 1;
  } else {
    const long shift = static_cast<long>(std::floor(bound)) - 52;
    x = static_cast<unsigned long>(std::ceil(std::exp2(bound - static_cast<double>(shift)))) + 1;
    x <<= static_cast<mp_bitcnt_t>(shift);
  }
  Integer t;
  mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), k);
  if (t <= n) return std::nullopt;
  return x;
}

// Shared driver for the prime-trial loop. `candidates` must be increasing.
// With `sieve`, primes ruled out by residues skip the Newton application.
void strip_prime_powers(PerfectPowerDecomposition& out, const std::vector<unsigned long>& candidates, bool sieve) {
  NewtonCounter counter;
  for (unsigned long p : candidates) {
    // 2^p > root means no p-th root above 1 can exist.
    if (p >= bit_length(out.root)) break;
    for (;;) {
      if (sieve && !may_be_pth_power(out.root, p)) break;
      auto r = integer_nth_root(out.root, p, &counter);
      out.trials.push_back({p, r.has_value()});
      if (!r) break;
      out.root = std::move(*r);
      out.exponent *= p;
    }
  }
  out.newton_applications = counter.applications;
}

// x^k, capped at 2^64 - 1.
std::uint64_t saturating_pow(std::uint64_t x, unsigned long k) {
  unsigned __int128 r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= x;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

// The same Newton iteration in machine arithmetic, for n < 2^64 and k >= 2.
std::uint64_t floor_root_u64(std::uint64_t n, unsigned long k) {
  const unsigned bits = 64 - static_cast<unsigned>(std::countl_zero(n));
  std::uint64_t x = static_cast<std::uint64_t>(std::ceil(std::exp2(std::log2(static_cast<double>(n)) / static_cast<double>(k)))) + 1;
  if (saturating_pow(x, k) <= n) x = std::uint64_t{1} << ((bits + k - 1) / k);
  for (;;) {
    const std::uint64_t t = saturating_pow(x, k - 1);
    const unsigned __int128 y = (static_cast<unsigned __int128>(k - 1) * x + n / t) / k;
    if (y >= x) break;
    x = static_cast<std::uint64_t>(y);
  }
  while (saturating_pow(x, k) > n) --x;
  while (x + 1 > x && saturating_pow(x + 1, k) <= n) ++x;
  return x;
}

}  // namespace

Integer floor_root(const Integer& n, unsigned long k, NewtonCounter* counter) {
  if (n < 0) throw AbsurdError(Errc::InvalidArgument, "floor_root of a negative number");
  if (k == 0) throw AbsurdError(Errc::InvalidArgument, "zeroth root");
  if (counter != nullptr) ++counter->applications;
  if (k == 1 || n < 2) return n;
  if (n.fits_ulong_p()) return Integer(floor_root_u64(n.get_ui(), k));

  Integer x;
  if (auto est = estimated_root(n, k)) {
    x = std::move(*est);
  } else {
    mpz_setbit(x.get_mpz_t(), (bit_length(n) + k - 1) / k);  // 2^ceil(b/k) > n^(1/k)
  }

  const Integer km1 = k - 1;
  Integer t, y;
  for (;;) {
    mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), k - 1);
    y = n / t;
    y += km1 * x;
    y /= k;
    if (y >= x) break;
    x = y;
  }
  // The iteration settles on the floor root from above; these loops only
  // guard the exit condition.
  while (true) {
    mpz_pow_ui(t.get_mpz_t(), x.get_mpz_t(), k);
    if (t <= n) break;
    --x;
  }
  while (true) {
    Integer next = x + 1;
    mpz_pow_ui(t.get_mpz_t(), next.get_mpz_t(), k);
    if (t > n) break;
    x = next;
  }
  return x;
}

std::optional<Integer> integer_nth_root(const Integer& n, unsigned long k, NewtonCounter* counter) {
  Integer x = floor_root(n, k, counter);
  Integer check;
  mpz_pow_ui(check.get_mpz_t(), x.get_mpz_t(), k);
  if (check != n) return std::nullopt;
  return x;
}

std::uint64_t PerfectPowerDecomposition::successes() const {
  return static_cast<std::uint64_t>(
      std::count_if(trials.begin(), trials.end(), [](const RootTrial& t) { return t.success; }));
}

std::uint64_t PerfectPowerDecomposition::failures() const { return trials.size() - successes(); }

PerfectPowerDecomposition max_perfect_power(const Integer& n, const PerfectPowerOptions& opts) {
  if (n < 2) throw AbsurdError(Errc::InvalidArgument, "max_perfect_power needs n >= 2");
  PerfectPowerDecomposition out{n, 1, 0, {}};
  if (opts.prime_fast_path && worth_primality_test(n) && is_probable_prime(n)) return out;

  const auto primes = primes_up_to(bit_length(n) + 1);
  std::vector<unsigned long> candidates;
  for (unsigned long p : *primes) {
    if (p > bit_length(n)) break;
    candidates.push_back(p);
  }
  strip_prime_powers(out, candidates, opts.prime_fast_path);
  return out;
}

PerfectPowerDecomposition max_perfect_power_restricted(const Integer& n, const Integer& allowed_exponent,
                                                       const PerfectPowerOptions& opts) {
  if (n < 2) throw AbsurdError(Errc::InvalidArgument, "max_perfect_power needs n >= 2");
  PerfectPowerDecomposition out{n, 1, 0, {}};
  if (allowed_exponent <= 1) return out;
  if (opts.prime_fast_path && worth_primality_test(n) && is_probable_prime(n)) return out;
  strip_prime_powers(out, prime_divisors(to_ulong(allowed_exponent)), opts.prime_fast_path);
  return out;
}

RationalPerfectPower max_perfect_power_rational(const Rational& r, const PerfectPowerOptions& opts) {
  if (r <= 0 || r == 1) throw AbsurdError(Errc::InvalidArgument, "max_perfect_power_rational needs r > 0, r != 1");
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();

  if (den == 1) {
    auto d = max_perfect_power(num, opts);
    return {Rational(d.root), d.exponent, d.newton_applications};
  }
  if (num == 1) {
    auto d = max_perfect_power(den, opts);
    return {make_rational(1, d.root), d.exponent, d.newton_applications};
  }

  // Decompose the smaller side fully; the larger side only needs the primes
  // of the first exponent.
  const bool num_smaller = num < den;
  const Integer& small = num_smaller ? num : den;
  const Integer& large = num_smaller ? den : num;
  auto first = max_perfect_power(small, opts);
  if (first.exponent == 1) return {r, 1, first.newton_applications};
  auto second = max_perfect_power_restricted(large, first.exponent, opts);

  Integer k;
  mpz_gcd(k.get_mpz_t(), first.exponent.get_mpz_t(), second.exponent.get_mpz_t());
  const Integer small_root = ipow(first.root, to_ulong(first.exponent / k));
  const Integer large_root = ipow(second.root, to_ulong(second.exponent / k));
  const std::uint64_t applications = first.newton_applications + second.newton_applications;
  if (num_smaller) return {make_rational(small_root, large_root), k, applications};
  return {make_rational(large_root, small_root), k, applications};
}

std::optional<Rational> exact_rational_root(const Rational& r, unsigned long d, NewtonCounter* counter) {
  if (r <= 0) throw AbsurdError(Errc::InvalidArgument, "exact_rational_root needs r > 0");
  if (d == 0) throw AbsurdError(Errc::InvalidArgument, "zeroth root");
  auto num = integer_nth_root(r.get_num(), d, counter);
  if (!num) return std::nullopt;
  auto den = integer_nth_root(r.get_den(), d, counter);
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

ReciprocalPower max_reciprocal_root(const Rational& r, const Rational& exponent) {
  if (r <= 0) throw AbsurdError(Errc::InvalidArgument, "max_reciprocal_root needs r > 0");
  if (exponent <= 0) throw AbsurdError(Errc::InvalidArgument, "max_reciprocal_root needs a positive exponent");

  const unsigned long d = to_ulong(exponent.get_den());
  Rational current = r;
  unsigned long taken = 1;
  // The exponents k for which r is a perfect k-th power are the divisors of
  // its maximal exponent, so a greedy pass per prime of d finds the largest.
  for (unsigned long p : prime_divisors(d)) {
    unsigned long remaining = d / taken;
    while (remaining % p == 0) {
      auto root = exact_rational_root(current, p);
      if (!root) break;
      current = std::move(*root);
      taken *= p;
      remaining /= p;
    }
  }
  return {rpow(current, to_long(exponent.get_num())), Integer(d / taken)};
}

}  // namespace absurd
