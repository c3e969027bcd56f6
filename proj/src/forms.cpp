#include "absurd/forms.hpp"

#include <algorithm>
#include <map>

#include "absurd/settings.hpp"

namespace absurd {

namespace {

constexpr std::array<std::string_view, 16> kNames = {
    "pure_primal",
    "proper_primal",
    "tight_balanced_primal",
    "loose_balanced_primal",
    "coprime_sqfree_int_distinct",
    "coprime_sqfree_int_proper",
    "coprime_sqfree_int_tight",
    "coprime_sqfree_int_loose",
    "coprime_sqfree_rat_proper",
    "coprime_sqfree_rat_tight",
    "imperfect_single",
    "imperfect_ratio",
    "max_reciprocal_single",
    "max_reciprocal_ratio",
    "single_min_int_base_proper",
    "single_int_imperfect_base",
};

using Powers = std::vector<std::pair<Integer, Rational>>;  // sorted by base

// Signed product of prime powers, possibly with composite bases left over
// when factoring gave up.
struct Primal {
  int sign = 1;
  Powers powers;
  bool complete = true;
};

std::uint64_t resolve_budget(std::optional<std::uint64_t> budget) {
  return budget ? *budget : settings().factor_budget;
}

Primal primal_of(const AbsurdNumber& a, std::uint64_t budget) {
  Primal out;
  out.sign = a.sign();
  std::map<Integer, Rational> acc;
  Powers pending;
  auto feed = [&](const Integer& n, const Rational& e, bool known_prime) {
    if (n == 1) return;
    if (known_prime) {
      acc[n] += e;
      return;
    }
    if (auto f = factor_full(n, budget)) {
      for (const auto& pp : *f) acc[pp.prime] += e * pp.multiplicity;
    } else {
      pending.emplace_back(n, e);
    }
  };
  feed(abs(a.coefficient().get_num()), 1, false);
  feed(a.coefficient().get_den(), -1, false);
  for (const auto& f : a.factors()) feed(f.base, f.exponent, f.kind == BaseKind::prime);

  if (!pending.empty()) {
    out.complete = false;
    std::vector<Integer> values;
    for (const auto& [n, e] : pending) values.push_back(n);
    const auto basis = coprime_basis(values);
    for (auto& [n, e] : pending) {
      for (const auto& b : basis) {
        unsigned long mult = 0;
        while (mpz_divisible_p(n.get_mpz_t(), b.get_mpz_t())) {
          mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), b.get_mpz_t());
          ++mult;
        }
        if (mult > 0) acc[b] += e * mult;
      }
    }
  }
  for (auto& [p, e] : acc) {
    if (e != 0) out.powers.emplace_back(p, e);
  }
  return out;
}

// e * L for an exponent whose denominator divides L.
unsigned long scaled(const Rational& e, const Integer& L) {
  const Rational v = e * L;
  return v.get_num().get_ui();
}

enum class Window { none, proper, tight, loose };

// Integer shift k so that e - k lands in the window.
Integer shift_for(const Rational& e, Window w) {
  switch (w) {
    case Window::none: return 0;
    case Window::proper: return floor(e);
    case Window::tight: return ceil(e - Rational(1, 2));
    case Window::loose: return e > 0 ? floor(e) : ceil(e);
  }
  return 0;
}

// Moves integer parts of the exponents into the coefficient.
Rational apply_window(Powers& powers, Window w) {
  Rational coef = 1;
  Powers kept;
  for (auto& [p, e] : powers) {
    const Integer k = shift_for(e, w);
    if (k != 0) coef *= rpow(Rational(p), to_long(k));
    Rational rest = e - Rational(k);
    if (rest != 0) kept.emplace_back(p, std::move(rest));
  }
  if (w == Window::loose) {
    // Numerator radicands must not divide the coefficient denominator, and
    // denominator radicands must not divide its numerator.
    for (auto& [p, e] : kept) {
      if (e > 0 && mpz_divisible_p(coef.get_den_mpz_t(), p.get_mpz_t())) {
        coef *= p;
        e -= 1;
      } else if (e < 0 && mpz_divisible_p(coef.get_num_mpz_t(), p.get_mpz_t())) {
        coef /= p;
        e += 1;
      }
    }
  }
  powers = std::move(kept);
  return coef;
}

void sort_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    if (int c = cmp(x.base.get_num(), y.base.get_num()); c != 0) return c < 0;
    if (int c = cmp(x.base.get_den(), y.base.get_den()); c != 0) return c < 0;
    return x.exponent < y.exponent;
  });
}

DisplayForm make_form(FormKind kind, Rational coef, std::vector<Term> terms, bool complete = true) {
  sort_terms(terms);
  DisplayForm f;
  f.kind = kind;
  f.coefficient = std::move(coef);
  f.terms = std::move(terms);
  f.complete = complete;
  return f;
}

DisplayForm rational_form(FormKind kind, const AbsurdNumber& a) { return make_form(kind, a.coefficient(), {}); }

DisplayForm finish(DisplayForm f) {
  if (!f.complete) throw FactoringBudgetExhausted(std::move(f));
  return f;
}

std::vector<Term> terms_of(const Powers& powers) {
  std::vector<Term> terms;
  for (const auto& [p, e] : powers) terms.push_back({Rational(p), e});
  return terms;
}

DisplayForm primal_form(const AbsurdNumber& a, FormKind kind, Window w, std::uint64_t budget) {
  if (a.is_zero()) return rational_form(kind, a);
  Primal p = primal_of(a, budget);
  const Rational coef = apply_window(p.powers, w) * p.sign;
  return finish(make_form(kind, coef, terms_of(p.powers), p.complete));
}

DisplayForm coprime_int_form(const AbsurdNumber& a, FormKind kind, Window w, std::uint64_t budget) {
  if (a.is_zero()) return rational_form(kind, a);
  Primal p = primal_of(a, budget);
  const Rational coef = apply_window(p.powers, w) * p.sign;
  std::map<Rational, Integer> groups;
  for (const auto& [base, e] : p.powers) {
    auto [it, fresh] = groups.try_emplace(e, base);
    if (!fresh) it->second *= base;
  }
  std::vector<Term> terms;
  for (const auto& [e, base] : groups) terms.push_back({Rational(base), e});
  return finish(make_form(kind, coef, std::move(terms), p.complete));
}

DisplayForm coprime_rat_form(const AbsurdNumber& a, FormKind kind, Window w, std::uint64_t budget) {
  if (a.is_zero()) return rational_form(kind, a);
  Primal p = primal_of(a, budget);
  // Primes whose exponents differ only in sign share one rational base.
  std::map<Rational, std::pair<Integer, Integer>> by_magnitude;
  for (const auto& [base, e] : p.powers) {
    auto& [num, den] = by_magnitude.try_emplace(abs(e), Integer(1), Integer(1)).first->second;
    (e > 0 ? num : den) *= base;
  }
  Rational coef = p.sign;
  std::map<Rational, Rational> merged;  // exponent -> base
  for (const auto& [e, parts] : by_magnitude) {
    Rational base = make_rational(parts.first, parts.second);
    const Integer k = shift_for(e, w);
    if (k != 0) coef *= rpow(base, to_long(k));
    Rational rest = e - Rational(k);
    if (rest == 0) continue;
    if (rest < 0) {
      base = 1 / base;
      rest = -rest;
    }
    auto [it, fresh] = merged.try_emplace(rest, base);
    if (!fresh) it->second *= base;
  }
  std::vector<Term> terms;
  for (const auto& [e, base] : merged) terms.push_back({base, e});
  return finish(make_form(kind, coef, std::move(terms), p.complete));
}

// |a| = root^(exponent) with root a rational imperfect power.
struct Imperfect {
  int sign;
  Rational root;
  Rational exponent;
};

Imperfect imperfect_of(const AbsurdNumber& a) {
  Integer lcm_den = 1;
  for (const auto& f : a.factors()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), f.exponent.get_den_mpz_t());
  const unsigned long L = lcm_den.get_ui();
  const Rational& c = a.coefficient();
  Integer num = ipow(abs(c.get_num()), L);
  const Integer den = ipow(c.get_den(), L);
  for (const auto& f : a.factors()) {
    num *= ipow(f.base, scaled(f.exponent, lcm_den));
  }
  const Rational r = make_rational(num, den);
  const auto pp = max_perfect_power_rational(r, {settings().prime_fast_path});
  return {a.sign(), pp.root, make_rational(pp.exponent, lcm_den)};
}

// Integer n (>= 1) written as root^k with root imperfect.
std::pair<Integer, Integer> int_imperfect(const Integer& n) {
  if (n < 2) return {n, 1};
  auto pp = max_perfect_power(n, {settings().prime_fast_path});
  return {pp.root, pp.exponent};
}

struct RatioParts {
  int sign;
  Integer num;
  Rational num_exp;  // > 0 unless num == 1
  Integer den;
  Rational den_exp;  // > 0 unless den == 1; the value divides by den^den_exp
};

RatioParts ratio_parts(const AbsurdNumber& a) {
  const Imperfect im = imperfect_of(a);
  const auto [n, kn] = int_imperfect(im.root.get_num());
  const auto [d, kd] = int_imperfect(im.root.get_den());
  return {im.sign, n, n == 1 ? Rational(0) : im.exponent * kn, d, d == 1 ? Rational(0) : im.exponent * kd};
}

Rational unit_fraction(const Integer& m) { return make_rational(1, m); }


}  // namespace

std::string_view form_name(FormKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

int form_number(FormKind kind) { return static_cast<int>(kind) + 1; }

FormKind parse_form_kind(std::string_view text) {
  std::optional<FormKind> found;
  for (FormKind k : kAllFormKinds) {
    const std::string_view name = form_name(k);
    if (name == text) return k;
    if (!text.empty() && name.starts_with(text)) {
      if (found) throw AbsurdError(Errc::InvalidArgument, "ambiguous form name: " + std::string(text));
      found = k;
    }
  }
  if (!found) throw AbsurdError(Errc::InvalidArgument, "unknown form name: " + std::string(text));
  return *found;
}

bool needs_factoring(FormKind kind) {
  switch (kind) {
    case FormKind::imperfect_single:
    case FormKind::imperfect_ratio:
    case FormKind::max_reciprocal_single:
    case FormKind::max_reciprocal_ratio:
    case FormKind::single_int_imperfect_base:
      return false;
    default:
      return true;
  }
}

DisplayForm to_pure_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget) {
  return primal_form(a, FormKind::pure_primal, Window::none, resolve_budget(budget));
}

DisplayForm to_proper_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget) {
  return primal_form(a, FormKind::proper_primal, Window::proper, resolve_budget(budget));
}

DisplayForm to_tight_balanced_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget) {
  return primal_form(a, FormKind::tight_balanced_primal, Window::tight, resolve_budget(budget));
}

DisplayForm to_loose_balanced_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget) {
  return primal_form(a, FormKind::loose_balanced_primal, Window::loose, resolve_budget(budget));
}

DisplayForm to_imperfect_single(const AbsurdNumber& a) {
  if (a.is_rational()) return rational_form(FormKind::imperfect_single, a);
  const Imperfect im = imperfect_of(a);
  return make_form(FormKind::imperfect_single, im.sign, {{im.root, im.exponent}});
}

DisplayForm to_imperfect_ratio(const AbsurdNumber& a) {
  if (a.is_rational()) return rational_form(FormKind::imperfect_ratio, a);
  const RatioParts r = ratio_parts(a);
  std::vector<Term> terms;
  if (r.num != 1) terms.push_back({Rational(r.num), r.num_exp});
  if (r.den != 1) terms.push_back({Rational(r.den), -r.den_exp});
  return make_form(FormKind::imperfect_ratio, r.sign, std::move(terms));
}

DisplayForm to_max_reciprocal_single(const AbsurdNumber& a) {
  if (a.is_rational()) return rational_form(FormKind::max_reciprocal_single, a);
  const Imperfect im = imperfect_of(a);
  const auto rr = max_reciprocal_root(im.root, im.exponent);
  return make_form(FormKind::max_reciprocal_single, im.sign, {{rr.base, unit_fraction(rr.inverse_exponent)}});
}

DisplayForm to_max_reciprocal_ratio(const AbsurdNumber& a) {
  if (a.is_rational()) return rational_form(FormKind::max_reciprocal_ratio, a);
  const RatioParts r = ratio_parts(a);
  std::vector<Term> terms;
  if (r.num != 1) {
    const auto rr = max_reciprocal_root(Rational(r.num), r.num_exp);
    terms.push_back({rr.base, unit_fraction(rr.inverse_exponent)});
  }
  if (r.den != 1) {
    const auto rr = max_reciprocal_root(Rational(r.den), r.den_exp);
    terms.push_back({rr.base, -unit_fraction(rr.inverse_exponent)});
  }
  return make_form(FormKind::max_reciprocal_ratio, r.sign, std::move(terms));
}

DisplayForm to_single_min_int_base(const AbsurdNumber& a, std::optional<std::uint64_t> budget) {
  constexpr FormKind kind = FormKind::single_min_int_base_proper;
  if (a.is_zero()) return rational_form(kind, a);
  Primal p = primal_of(a, resolve_budget(budget));
  const Rational coef = apply_window(p.powers, Window::proper) * p.sign;
  Integer L = 1;
  for (const auto& [base, e] : p.powers) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e.get_den_mpz_t());
  std::vector<Term> terms;
  if (!p.powers.empty()) {
    Integer radicand = 1;
    for (const auto& [base, e] : p.powers) radicand *= ipow(base, scaled(e, L));
    terms.push_back({Rational(radicand), unit_fraction(L)});
  }
  return finish(make_form(kind, coef, std::move(terms), p.complete));
}

DisplayForm to_single_int_imperfect_base(const AbsurdNumber& a) {
  constexpr FormKind kind = FormKind::single_int_imperfect_base;
  if (a.is_rational()) return rational_form(kind, a);
  const RatioParts r = ratio_parts(a);
  Rational coef = r.sign;
  std::vector<std::pair<Integer, Rational>> pieces;
  if (r.num != 1) {
    const Integer whole = floor(r.num_exp);
    coef *= ipow(r.num, whole.get_ui());
    if (Rational rest = r.num_exp - Rational(whole); rest != 0) pieces.emplace_back(r.num, rest);
  }
  if (r.den != 1) {
    // d^-(w + f) = d^(1 - f) / d^(w + 1) for a fractional part f > 0.
    Integer whole = floor(r.den_exp);
    const Rational rest = r.den_exp - Rational(whole);
    if (rest != 0) {
      whole += 1;
      pieces.emplace_back(r.den, 1 - rest);
    }
    coef /= ipow(r.den, whole.get_ui());
  }
  std::vector<Term> terms;
  if (!pieces.empty()) {
    Integer L = 1;
    for (const auto& [base, e] : pieces) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), e.get_den_mpz_t());
    Integer radicand = 1;
    for (const auto& [base, e] : pieces) radicand *= ipow(base, scaled(e, L));
    terms.push_back({Rational(radicand), unit_fraction(L)});
  }
  return make_form(kind, coef, std::move(terms));
}

DisplayForm to_form(const AbsurdNumber& a, FormKind kind, std::optional<std::uint64_t> budget) {
  const std::uint64_t b = resolve_budget(budget);
  switch (kind) {
    case FormKind::pure_primal: return primal_form(a, kind, Window::none, b);
    case FormKind::proper_primal: return primal_form(a, kind, Window::proper, b);
    case FormKind::tight_balanced_primal: return primal_form(a, kind, Window::tight, b);
    case FormKind::loose_balanced_primal: return primal_form(a, kind, Window::loose, b);
    case FormKind::coprime_sqfree_int_distinct: return coprime_int_form(a, kind, Window::none, b);
    case FormKind::coprime_sqfree_int_proper: return coprime_int_form(a, kind, Window::proper, b);
    case FormKind::coprime_sqfree_int_tight: return coprime_int_form(a, kind, Window::tight, b);
    case FormKind::coprime_sqfree_int_loose: return coprime_int_form(a, kind, Window::loose, b);
    case FormKind::coprime_sqfree_rat_proper: return coprime_rat_form(a, kind, Window::proper, b);
    case FormKind::coprime_sqfree_rat_tight: return coprime_rat_form(a, kind, Window::tight, b);
    case FormKind::imperfect_single: return to_imperfect_single(a);
    case FormKind::imperfect_ratio: return to_imperfect_ratio(a);
    case FormKind::max_reciprocal_single: return to_max_reciprocal_single(a);
    case FormKind::max_reciprocal_ratio: return to_max_reciprocal_ratio(a);
    case FormKind::single_min_int_base_proper: return to_single_min_int_base(a, b);
    case FormKind::single_int_imperfect_base: return to_single_int_imperfect_base(a);
  }
  throw AbsurdError(Errc::InvalidArgument, "unknown form kind");
}

AbsurdNumber value_of(const DisplayForm& f) {
  std::vector<Radical> radicals;
  for (const auto& t : f.terms) {
    if (t.base <= 0) throw AbsurdError(Errc::NonPositiveBase, "display base must be positive");
    radicals.push_back({t.base.get_num(), t.exponent});
    radicals.push_back({t.base.get_den(), -t.exponent});
  }
  return assemble(f.coefficient, radicals);
}

}  // namespace absurd
