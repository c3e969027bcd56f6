#include <algorithm>
#include <deque>

#include "absurd/core.hpp"
#include "absurd/settings.hpp"

namespace absurd {

std::vector<Integer> coprime_basis(std::span<const Integer> values, RefineTrace* trace) {
  std::vector<Integer> basis;
  std::deque<Integer> work;
  for (const auto& v : values) {
    if (v > 1) work.push_back(v);
  }

  Integer g;
  // Each split replaces (y, b) by (g, b/g, y/g), whose product is y*b/g, so
  // the product of everything pending strictly decreases.
  while (!work.empty()) {
    Integer y = std::move(work.front());
    work.pop_front();
    if (y == 1) continue;

    bool consumed = false;
    for (auto it = basis.begin(); it != basis.end(); ++it) {
      if (*it == y) {
        consumed = true;
        break;
      }
      mpz_gcd(g.get_mpz_t(), y.get_mpz_t(), it->get_mpz_t());
      if (g == 1) continue;
      if (trace != nullptr) trace->push_back({y, *it, g});
      Integer b = std::move(*it);
      basis.erase(it);
      work.push_back(g);
      if (b != g) work.push_back(b / g);
      if (y != g) work.push_back(y / g);
      consumed = true;
      break;
    }
    if (!consumed) basis.push_back(std::move(y));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

Integer large_part(const Integer& n) {
  Integer m = abs(n);
  if (m <= 1) return 1;
  return factor_bounded(m, settings().small_prime_bound).cofactor;
}

std::vector<AbsurdNumber> rebase_together(std::span<const AbsurdNumber> values, RefineTrace* trace) {
  std::vector<AbsurdNumber> out(values.begin(), values.end());
  const bool any_large =
      std::any_of(values.begin(), values.end(), [](const AbsurdNumber& v) { return v.has_large_bases(); });
  if (!any_large) return out;

  const unsigned long bound = settings().small_prime_bound;
  std::vector<Integer> pool;
  for (const auto& v : values) {
    for (const auto& f : v.factors()) {
      if (f.base > bound) pool.push_back(f.base);
    }
    pool.push_back(large_part(v.coefficient().get_num()));
    pool.push_back(large_part(v.coefficient().get_den()));
  }
  // One shared basis keeps the pieces identical across all values.
  const std::vector<Integer> basis = coprime_basis(pool, trace);
  for (auto& v : out) {
    if (v.is_zero()) continue;
    const auto radicals = radicals_of(v);
    v = assemble(v.coefficient(), radicals, basis);
  }
  return out;
}

AbsurdNumber coprime_refine(const AbsurdNumber& a, RefineTrace* trace) {
  const auto radicals = radicals_of(a);
  return assemble(a.coefficient(), radicals, {}, trace);
}

}  // namespace absurd
