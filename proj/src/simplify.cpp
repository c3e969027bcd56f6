#include <algorithm>
#include <map>

#include "absurd/error.hpp"
#include "absurd/expr.hpp"

namespace absurd {

namespace {

constexpr std::size_t kMaxTerms = 1'000'000;

bool factors_less(const std::vector<Factor>& a, const std::vector<Factor>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Factor& x, const Factor& y) {
    if (int c = cmp(x.base, y.base); c != 0) return c < 0;
    return x.exponent < y.exponent;
  });
}

struct FactorsLess {
  bool operator()(const std::vector<Factor>& a, const std::vector<Factor>& b) const { return factors_less(a, b); }
};

// Sums terms with identical factor lists.
std::vector<AbsurdNumber> merge_identical(const std::vector<AbsurdNumber>& terms) {
  std::map<std::vector<Factor>, AbsurdNumber, FactorsLess> groups;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    auto [it, fresh] = groups.try_emplace(t.factors(), t);
    if (!fresh) it->second = *add(it->second, t);
  }
  std::vector<AbsurdNumber> out;
  for (auto& [key, value] : groups) {
    if (!value.is_zero()) out.push_back(std::move(value));
  }
  return out;
}

SumOfAbsurds negate_sum(const SumOfAbsurds& s) {
  SumOfAbsurds out;
  for (const auto& t : s.terms) out.terms.push_back(negate(t));
  return out;
}

SumOfAbsurds add_sums(const SumOfAbsurds& a, const SumOfAbsurds& b) {
  std::vector<AbsurdNumber> terms = a.terms;
  terms.insert(terms.end(), b.terms.begin(), b.terms.end());
  return make_sum(std::move(terms));
}

SumOfAbsurds mul_sums(const SumOfAbsurds& a, const SumOfAbsurds& b) {
  if (a.terms.size() * b.terms.size() > kMaxTerms) throw AbsurdError(Errc::Overflow, "product expands to too many terms");
  std::vector<AbsurdNumber> terms;
  terms.reserve(a.terms.size() * b.terms.size());
  for (const auto& x : a.terms) {
    for (const auto& y : b.terms) terms.push_back(mul(x, y));
  }
  return make_sum(std::move(terms));
}

SumOfAbsurds single(AbsurdNumber a) { return make_sum({std::move(a)}); }

SumOfAbsurds pow_sum(const SumOfAbsurds& s, const Rational& alpha) {
  if (s.terms.size() <= 1) {
    const AbsurdNumber base = s.is_zero() ? AbsurdNumber() : s.terms[0];
    return single(pow(base, alpha));
  }
  if (!is_integer(alpha)) {
    throw AbsurdError(Errc::FractionalPowerOfSum, "fractional power " + to_string(alpha) + " of a multi-term sum");
  }
  if (alpha < 0) throw AbsurdError(Errc::UnsupportedDenominator, "negative power of a multi-term sum");
  unsigned long n = alpha.get_num().get_ui();
  SumOfAbsurds result = single(from_integer(1));
  SumOfAbsurds square = s;
  while (n > 0) {
    if (n & 1UL) result = mul_sums(result, square);
    n >>= 1;
    if (n > 0) square = mul_sums(square, square);
  }
  return result;
}

SumOfAbsurds divide_sums(const SumOfAbsurds& u, const SumOfAbsurds& v) {
  if (v.is_zero()) {
    if (u.is_zero()) throw AbsurdError(Errc::Indeterminate, "indeterminate (0/0)");
    throw AbsurdError(Errc::DivisionByZero, "division by zero");
  }
  if (!v.is_single()) throw AbsurdError(Errc::UnsupportedDenominator, "denominator is a multi-term sum");
  return mul_sums(u, single(inverse(v.terms[0])));
}

}  // namespace

bool factor_list_less(const AbsurdNumber& a, const AbsurdNumber& b) { return factors_less(a.factors(), b.factors()); }

SumOfAbsurds make_sum(std::vector<AbsurdNumber> terms) {
  std::vector<AbsurdNumber> merged = merge_identical(terms);
  const bool any_large =
      std::any_of(merged.begin(), merged.end(), [](const AbsurdNumber& t) { return t.has_large_bases(); });
  if (merged.size() >= 2 && any_large) {
    // Different splittings of the same large radicand only line up over a
    // shared basis; afterwards each survivor is normalized on its own again.
    merged = merge_identical(rebase_together(merged));
    for (auto& t : merged) t = coprime_refine(t);
  }
  std::sort(merged.begin(), merged.end(), factor_list_less);
  return {std::move(merged)};
}

SumOfAbsurds simplify(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number: return single(from_rational(e.value));
    case Expr::Kind::negate: return negate_sum(simplify(*e.lhs));
    case Expr::Kind::add: return add_sums(simplify(*e.lhs), simplify(*e.rhs));
    case Expr::Kind::subtract: return add_sums(simplify(*e.lhs), negate_sum(simplify(*e.rhs)));
    case Expr::Kind::multiply: return mul_sums(simplify(*e.lhs), simplify(*e.rhs));
    case Expr::Kind::divide: {
      const SumOfAbsurds u = simplify(*e.lhs);
      return divide_sums(u, simplify(*e.rhs));
    }
    case Expr::Kind::power: return pow_sum(simplify(*e.lhs), e.exponent);
  }
  throw AbsurdError(Errc::InvalidArgument, "unknown expression node");
}

SumOfAbsurds simplify(std::string_view text) { return simplify(*parse(text)); }

RenderedSum render_sum(const SumOfAbsurds& s, const SumRenderOptions& opts) {
  RenderedSum out;
  if (s.is_zero()) {
    out.text = "0";
    return out;
  }

  auto compose = [&](std::vector<DisplayForm>& forms) {
    std::string text;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      DisplayForm f = forms[i];
      f.layout = opts.layout;
      if (i > 0) {
        text += f.coefficient < 0 ? " - " : " + ";
        if (f.coefficient < 0) f.coefficient = -f.coefficient;
      }
      text += opts.latex ? render_latex(f) : render_text(f);
    }
    for (auto& f : forms) f.layout = opts.layout;
    return text;
  };
  auto forms_for = [&](FormKind k) {
    std::vector<DisplayForm> forms;
    for (const auto& t : s.terms) forms.push_back(to_form(t, k, opts.budget));
    return forms;
  };

  if (opts.kind) {
    out.kind = opts.kind;
    out.forms = forms_for(*opts.kind);
    out.text = compose(out.forms);
    return out;
  }

  // Sizes are compared on plain text so LaTeX output picks the same kind.
  std::optional<std::size_t> best_size;
  for (FormKind k : kRecommendedFormKinds) {
    try {
      auto forms = forms_for(k);
      const std::size_t size = [&] {
        std::string t;
        for (std::size_t i = 0; i < forms.size(); ++i) {
          DisplayForm f = forms[i];
          f.layout = opts.layout;
          if (i > 0) {
            t += " + ";
            f.coefficient = abs(f.coefficient);
          }
          t += render_text(f);
        }
        return t.size();
      }();
      if (!best_size || size < *best_size) {
        best_size = size;
        out.kind = k;
        out.forms = std::move(forms);
      }
    } catch (const FactoringBudgetExhausted&) {
    }
  }
  if (!best_size) {
    out.kind = FormKind::single_int_imperfect_base;
    out.forms = forms_for(*out.kind);
  }
  out.text = compose(out.forms);
  return out;
}

}  // namespace absurd
