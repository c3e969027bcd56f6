#include <algorithm>
#include <set>

#include "absurd/forms.hpp"
#include "absurd/settings.hpp"

namespace absurd {

namespace {

std::string text_exponent(const Rational& e) {
  if (e == 1) return "";
  if (is_integer(e)) return e > 0 ? "^" + to_string(e) : "^(" + to_string(e) + ")";
  return "^(" + to_string(e) + ")";
}

std::string text_base(const Rational& b) {
  return is_integer(b) ? to_string(b) : "(" + to_string(b) + ")";
}

std::string text_term(const Term& t) { return text_base(t.base) + text_exponent(t.exponent); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string latex_rational(const Rational& r) {
  if (is_integer(r)) return to_string(r);
  const std::string sign = r < 0 ? "-" : "";
  return sign + "\\frac{" + to_string(Integer(abs(r.get_num()))) + "}{" + to_string(r.get_den()) + "}";
}

std::string latex_term(const Term& t) {
  const std::string base = latex_rational(t.base);
  if (t.exponent == Rational(1, 2)) return "\\sqrt{" + base + "}";
  const std::string wrapped = is_integer(t.base) ? base : "\\left(" + base + "\\right)";
  if (t.exponent == 1) return wrapped;
  return wrapped + "^{" + to_string(t.exponent) + "}";
}

// Numerator and denominator factor lists for the ratio layout.
struct Split {
  bool negative;
  std::vector<Term> num;
  std::vector<Term> den;
  Integer coef_num;
  Integer coef_den;
};

Split split_ratio(const DisplayForm& f) {
  Split s{f.coefficient < 0, {}, {}, abs(f.coefficient.get_num()), f.coefficient.get_den()};
  for (const auto& t : f.terms) {
    if (t.exponent > 0) {
      s.num.push_back(t);
    } else {
      s.den.push_back({t.base, -t.exponent});
    }
  }
  return s;
}

std::string render_text_ratio(const DisplayForm& f) {
  const Split s = split_ratio(f);
  std::vector<std::string> num, den;
  if (s.coef_num != 1 || s.num.empty()) num.push_back(to_string(s.coef_num));
  for (const auto& t : s.num) num.push_back(text_term(t));
  if (s.coef_den != 1) den.push_back(to_string(s.coef_den));
  for (const auto& t : s.den) den.push_back(text_term(t));
  std::string out = (s.negative ? "-" : "") + join(num, "*");
  if (den.size() == 1) out += "/" + den[0];
  if (den.size() > 1) out += "/(" + join(den, "*") + ")";
  return out;
}

std::string render_text_product(const DisplayForm& f) {
  if (f.terms.empty()) return to_string(f.coefficient);
  std::vector<std::string> parts;
  std::string sign;
  if (f.coefficient == -1) {
    sign = "-";
  } else if (f.coefficient != 1) {
    parts.push_back(to_string(f.coefficient));
  }
  for (const auto& t : f.terms) parts.push_back(text_term(t));
  return sign + join(parts, "*");
}

bool in_open_unit(const Rational& e) { return e > 0 && e < 1; }

bool pairwise_coprime(const std::vector<Integer>& values) {
  Integer g;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      mpz_gcd(g.get_mpz_t(), values[i].get_mpz_t(), values[j].get_mpz_t());
      if (g != 1) return false;
    }
  }
  return true;
}

// nullopt when factoring is too expensive to decide.
std::optional<bool> square_free(const Integer& n) {
  auto f = factor_full(n, settings().factor_budget);
  if (!f) return std::nullopt;
  return std::all_of(f->begin(), f->end(), [](const PrimePower& p) { return p.multiplicity == 1; });
}

bool imperfect(const Rational& r) {
  if (r == 1) return false;
  return max_perfect_power_rational(r).exponent == 1;
}

bool reciprocal_fixpoint(const Term& t) {
  const Rational e = abs(t.exponent);
  if (e.get_num() != 1) return false;
  const auto rr = max_reciprocal_root(t.base, e);
  return rr.base == t.base && rr.inverse_exponent == e.get_den();
}

}  // namespace

std::string render_text(const DisplayForm& f) {
  return f.layout == Layout::ratio ? render_text_ratio(f) : render_text_product(f);
}

std::string render_latex(const DisplayForm& f) {
  if (f.terms.empty()) return latex_rational(f.coefficient);
  if (f.layout == Layout::ratio) {
    const Split s = split_ratio(f);
    std::vector<std::string> num, den;
    if (s.coef_num != 1 || s.num.empty()) num.push_back(to_string(s.coef_num));
    for (const auto& t : s.num) num.push_back(latex_term(t));
    if (s.coef_den != 1) den.push_back(to_string(s.coef_den));
    for (const auto& t : s.den) den.push_back(latex_term(t));
    const std::string sign = s.negative ? "-" : "";
    if (den.empty()) return sign + join(num, "\\,");
    return sign + "\\frac{" + join(num, "\\,") + "}{" + join(den, "\\,") + "}";
  }
  std::vector<std::string> parts;
  std::string sign;
  if (f.coefficient == -1) {
    sign = "-";
  } else if (f.coefficient != 1) {
    parts.push_back(latex_rational(f.coefficient));
  }
  for (const auto& t : f.terms) parts.push_back(latex_term(t));
  return sign + join(parts, "\\,");
}

SizeReport size_of(const DisplayForm& f) { return {f.kind, render_text(f).size(), true}; }

std::optional<std::string> check_form(const DisplayForm& f) {
  std::vector<Integer> int_bases;
  for (const auto& t : f.terms) {
    if (t.base <= 0) return "non-positive base";
    if (t.exponent == 0) return "zero exponent";
    if (t.base == 1) return "base 1";
    if (is_integer(t.base)) int_bases.push_back(t.base.get_num());
  }
  if (f.coefficient == 0 && !f.terms.empty()) return "zero coefficient with terms";
  if (f.terms.empty()) return std::nullopt;

  const bool all_int = int_bases.size() == f.terms.size();
  const bool unit_coef = abs(f.coefficient) == 1;
  auto all_exponents = [&](auto pred) {
    return std::all_of(f.terms.begin(), f.terms.end(), [&](const Term& t) { return pred(t.exponent); });
  };
  auto distinct_exponents = [&] {
    std::set<Rational> seen;
    for (const auto& t : f.terms) {
      if (!seen.insert(t.exponent).second) return false;
    }
    return true;
  };
  auto prime_bases = [&] {
    if (!f.complete) return true;
    return all_int && std::all_of(int_bases.begin(), int_bases.end(), [](const Integer& b) { return is_probable_prime(b); });
  };
  auto coprime_sqfree = [&]() -> std::optional<std::string> {
    if (!all_int) return "non-integer base";
    if (!pairwise_coprime(int_bases)) return "bases not pairwise coprime";
    for (const auto& b : int_bases) {
      if (square_free(b) == false) return "base " + to_string(b) + " not square-free";
    }
    return std::nullopt;
  };
  const auto tight = [](const Rational& e) { return e > Rational(-1, 2) && e <= Rational(1, 2); };
  const auto loose = [](const Rational& e) { return e > -1 && e < 1; };

  switch (f.kind) {
    case FormKind::pure_primal:
      if (!unit_coef) return "coefficient must be 1 or -1";
      if (!prime_bases()) return "bases must be prime";
      return std::nullopt;
    case FormKind::proper_primal:
      if (!prime_bases()) return "bases must be prime";
      if (!all_exponents(in_open_unit)) return "exponent outside (0,1)";
      return std::nullopt;
    case FormKind::tight_balanced_primal:
      if (!prime_bases()) return "bases must be prime";
      if (!all_exponents(tight)) return "exponent outside (-1/2,1/2]";
      return std::nullopt;
    case FormKind::loose_balanced_primal:
      if (!prime_bases()) return "bases must be prime";
      if (!all_exponents(loose)) return "exponent outside (-1,1)";
      for (const auto& t : f.terms) {
        const Integer& p = t.base.get_num();
        if (t.exponent > 0 && mpz_divisible_p(f.coefficient.get_den_mpz_t(), p.get_mpz_t()))
          return "numerator radicand divides the coefficient denominator";
        if (t.exponent < 0 && mpz_divisible_p(f.coefficient.get_num_mpz_t(), p.get_mpz_t()))
          return "denominator radicand divides the coefficient numerator";
      }
      return std::nullopt;
    case FormKind::coprime_sqfree_int_distinct:
    case FormKind::coprime_sqfree_int_proper:
    case FormKind::coprime_sqfree_int_tight:
    case FormKind::coprime_sqfree_int_loose: {
      if (auto bad = coprime_sqfree()) return bad;
      if (!distinct_exponents()) return "repeated exponent";
      if (f.kind == FormKind::coprime_sqfree_int_distinct && !unit_coef) return "coefficient must be 1 or -1";
      if (f.kind == FormKind::coprime_sqfree_int_proper && !all_exponents(in_open_unit)) return "exponent outside (0,1)";
      if (f.kind == FormKind::coprime_sqfree_int_tight && !all_exponents(tight)) return "exponent outside (-1/2,1/2]";
      if (f.kind == FormKind::coprime_sqfree_int_loose && !all_exponents(loose)) return "exponent outside (-1,1)";
      return std::nullopt;
    }
    case FormKind::coprime_sqfree_rat_proper:
    case FormKind::coprime_sqfree_rat_tight: {
      std::vector<Integer> parts;
      for (const auto& t : f.terms) {
        parts.push_back(t.base.get_num());
        if (t.base.get_den() != 1) parts.push_back(t.base.get_den());
      }
      if (!pairwise_coprime(parts)) return "base parts not pairwise coprime";
      if (!distinct_exponents()) return "repeated exponent";
      if (f.kind == FormKind::coprime_sqfree_rat_proper && !all_exponents(in_open_unit)) return "exponent outside (0,1)";
      if (f.kind == FormKind::coprime_sqfree_rat_tight &&
          !all_exponents([](const Rational& e) { return e > 0 && e <= Rational(1, 2); }))
        return "exponent outside (0,1/2]";
      return std::nullopt;
    }
    case FormKind::imperfect_single:
      if (f.terms.size() != 1 || !unit_coef) return "expected a single signed power";
      if (f.terms[0].exponent <= 0) return "exponent must be positive";
      if (!imperfect(f.terms[0].base)) return "base is a perfect power";
      return std::nullopt;
    case FormKind::imperfect_ratio:
    case FormKind::max_reciprocal_ratio: {
      if (!all_int || !unit_coef || f.terms.size() > 2) return "expected a signed ratio of integer powers";
      int pos = 0, neg = 0;
      for (const auto& t : f.terms) (t.exponent > 0 ? pos : neg)++;
      if (pos > 1 || neg > 1) return "expected one numerator and one denominator power";
      for (const auto& t : f.terms) {
        if (f.kind == FormKind::imperfect_ratio && !imperfect(t.base)) return "base is a perfect power";
        if (f.kind == FormKind::max_reciprocal_ratio && !reciprocal_fixpoint(t)) return "reciprocal power not maximal";
      }
      return std::nullopt;
    }
    case FormKind::max_reciprocal_single:
      if (f.terms.size() != 1 || !unit_coef) return "expected a single signed power";
      if (f.terms[0].exponent <= 0) return "exponent must be positive";
      if (!reciprocal_fixpoint(f.terms[0])) return "reciprocal power not maximal";
      return std::nullopt;
    case FormKind::single_min_int_base_proper:
    case FormKind::single_int_imperfect_base: {
      if (f.terms.size() != 1 || !all_int) return "expected a single integer radicand";
      const Rational& e = f.terms[0].exponent;
      if (e.get_num() != 1 || e.get_den() < 2) return "exponent must be a proper unit fraction";
      if (f.kind == FormKind::single_min_int_base_proper && f.complete) {
        // Every prime multiplicity below the root index.
        if (auto fac = factor_full(int_bases[0], settings().factor_budget)) {
          for (const auto& p : *fac) {
            if (p.multiplicity >= e.get_den()) return "radicand contains a full power";
          }
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Selection most_concise(const AbsurdNumber& a, std::span<const FormKind> kinds, std::optional<std::uint64_t> budget) {
  if (kinds.empty()) throw AbsurdError(Errc::InvalidArgument, "most_concise needs at least one form kind");
  auto rank = [](FormKind k) {
    const auto it = std::find(kRecommendedFormKinds.begin(), kRecommendedFormKinds.end(), k);
    if (it != kRecommendedFormKinds.end()) return static_cast<int>(it - kRecommendedFormKinds.begin());
    return static_cast<int>(kRecommendedFormKinds.size()) + static_cast<int>(k);
  };

  Selection out;
  std::optional<DisplayForm> best;
  std::size_t best_size = 0;
  for (FormKind k : kinds) {
    try {
      DisplayForm f = to_form(a, k, budget);
      const SizeReport r = size_of(f);
      out.reports.push_back(r);
      if (!best || r.size < best_size || (r.size == best_size && rank(k) < rank(best->kind))) {
        best = std::move(f);
        best_size = r.size;
      }
    } catch (const FactoringBudgetExhausted&) {
      out.reports.push_back({k, 0, false});
    }
  }
  out.best = best ? std::move(*best) : to_single_int_imperfect_base(a);
  return out;
}

}  // namespace absurd
