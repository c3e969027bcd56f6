#include <atomic>
#include <map>

#include "absurd/error.hpp"
#include "absurd/numkernel.hpp"

namespace absurd {

namespace {

std::atomic<std::uint64_t> g_factor_full_calls{0};

constexpr unsigned long kTrialBound = 1000;

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, or nullopt once `budget` iterations are spent.
std::optional<Integer> brent_rho(const Integer& n, std::uint64_t& budget) {
  constexpr std::uint64_t kBatch = 128;
  Integer x, y, ys, q, g, diff;
  auto step = [&](Integer& v, unsigned long c) {
    v *= v;
    v += c;
    v %= n;
  };

  for (unsigned long c = 1;; ++c) {
    y = 2;
    q = 1;
    g = 1;
    std::uint64_t r = 1;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) {
        if (budget == 0) return std::nullopt;
        --budget;
        step(y, c);
      }
      std::uint64_t k = 0;
      do {
        ys = y;
        const std::uint64_t batch = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < batch; ++i) {
          if (budget == 0) return std::nullopt;
          --budget;
          step(y, c);
          diff = x - y;
          q *= abs(diff);
          q %= n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);

    if (g == n) {
      // The batch overshot; replay it one step at a time.
      do {
        if (budget == 0) return std::nullopt;
        --budget;
        step(ys, c);
        diff = x - ys;
        diff = abs(diff);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

bool split_into(std::map<Integer, unsigned long>& acc, const Integer& m, unsigned long multiplicity,
                std::uint64_t& budget) {
  if (m == 1) return true;
  if (is_probable_prime(m)) {
    acc[m] += multiplicity;
    return true;
  }
  auto pp = max_perfect_power(m);
  if (pp.exponent > 1) return split_into(acc, pp.root, multiplicity * pp.exponent.get_ui(), budget);
  auto d = brent_rho(m, budget);
  if (!d) return false;
  return split_into(acc, *d, multiplicity, budget) && split_into(acc, m / *d, multiplicity, budget);
}

}  // namespace

BoundedFactorization factor_bounded(const Integer& n, unsigned long bound) {
  if (n < 1) throw AbsurdError(Errc::InvalidArgument, "factor_bounded needs n >= 1");
  BoundedFactorization out{{}, n};
  Integer& c = out.cofactor;
  const auto primes = primes_up_to(bound);
  for (unsigned long p : *primes) {
    if (p > bound) break;
    if (c < Integer(p) * p) {
      // c has no prime factor below p, so it is 1 or prime.
      if (c > 1 && c <= bound) {
        out.small_factors.push_back({c, 1});
        c = 1;
      }
      break;
    }
    if (!mpz_divisible_ui_p(c.get_mpz_t(), p)) continue;
    const Integer prime(p);
    const unsigned long mult = mpz_remove(c.get_mpz_t(), c.get_mpz_t(), prime.get_mpz_t());
    out.small_factors.push_back({prime, mult});
  }
  return out;
}

std::optional<std::vector<PrimePower>> factor_full(const Integer& n, std::uint64_t budget) {
  g_factor_full_calls.fetch_add(1, std::memory_order_relaxed);
  if (n < 1) throw AbsurdError(Errc::InvalidArgument, "factor_full needs n >= 1");

  auto bounded = factor_bounded(n, kTrialBound);
  std::map<Integer, unsigned long> acc;
  for (const auto& f : bounded.small_factors) acc[f.prime] += f.multiplicity;
  if (!split_into(acc, bounded.cofactor, 1, budget)) return std::nullopt;

  std::vector<PrimePower> out;
  out.reserve(acc.size());
  for (auto& [p, m] : acc) out.push_back({p, m});
  return out;
}

std::uint64_t factor_full_invocations() noexcept {
  return g_factor_full_calls.load(std::memory_order_relaxed);
}

}  // namespace absurd
