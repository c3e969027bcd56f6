#pragma once

// Display forms: alternative renderings of one absurd number, the size
// metric, and most-concise selection.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absurd/core.hpp"
#include "absurd/error.hpp"

namespace absurd {

enum class FormKind {
  pure_primal,
  proper_primal,
  tight_balanced_primal,
  loose_balanced_primal,
  coprime_sqfree_int_distinct,
  coprime_sqfree_int_proper,
  coprime_sqfree_int_tight,
  coprime_sqfree_int_loose,
  coprime_sqfree_rat_proper,
  coprime_sqfree_rat_tight,
  imperfect_single,
  imperfect_ratio,
  max_reciprocal_single,
  max_reciprocal_ratio,
  single_min_int_base_proper,
  single_int_imperfect_base,
};

inline constexpr std::array<FormKind, 16> kAllFormKinds = {
    FormKind::pure_primal,
    FormKind::proper_primal,
    FormKind::tight_balanced_primal,
    FormKind::loose_balanced_primal,
    FormKind::coprime_sqfree_int_distinct,
    FormKind::coprime_sqfree_int_proper,
    FormKind::coprime_sqfree_int_tight,
    FormKind::coprime_sqfree_int_loose,
    FormKind::coprime_sqfree_rat_proper,
    FormKind::coprime_sqfree_rat_tight,
    FormKind::imperfect_single,
    FormKind::imperfect_ratio,
    FormKind::max_reciprocal_single,
    FormKind::max_reciprocal_ratio,
    FormKind::single_min_int_base_proper,
    FormKind::single_int_imperfect_base,
};

// The default candidates for automatic selection.
inline constexpr std::array<FormKind, 7> kRecommendedFormKinds = {
    FormKind::single_min_int_base_proper,  FormKind::coprime_sqfree_int_distinct,
    FormKind::coprime_sqfree_int_proper,   FormKind::coprime_sqfree_int_tight,
    FormKind::coprime_sqfree_int_loose,    FormKind::coprime_sqfree_rat_proper,
    FormKind::coprime_sqfree_rat_tight,
};

std::string_view form_name(FormKind kind);
// Exact name or unique prefix; throws AbsurdError(InvalidArgument).
FormKind parse_form_kind(std::string_view text);
// 1-based row number in the conventional listing of forms.
int form_number(FormKind kind);
// True for kinds that need complete prime factorizations.
bool needs_factoring(FormKind kind);

enum class Layout { product, ratio };

struct Term {
  Rational base;      // > 0
  Rational exponent;  // != 0
};

struct DisplayForm {
  FormKind kind = FormKind::proper_primal;
  Rational coefficient;
  std::vector<Term> terms;
  Layout layout = Layout::product;
  // False when some radicand resisted factoring and was kept composite.
  bool complete = true;
};

class FactoringBudgetExhausted : public AbsurdError {
 public:
  explicit FactoringBudgetExhausted(DisplayForm partial)
      : AbsurdError(Errc::FactoringBudgetExhausted,
                    std::string("factoring budget exhausted for ") + std::string(form_name(partial.kind))),
        partial_(std::move(partial)) {}
  const DisplayForm& partial() const noexcept { return partial_; }

 private:
  DisplayForm partial_;
};

// Budget is in Pollard-rho iterations per factorization; nullopt uses the
// global setting. Factoring kinds throw FactoringBudgetExhausted.
DisplayForm to_form(const AbsurdNumber& a, FormKind kind, std::optional<std::uint64_t> budget = std::nullopt);

DisplayForm to_pure_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget = std::nullopt);
DisplayForm to_proper_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget = std::nullopt);
DisplayForm to_tight_balanced_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget = std::nullopt);
DisplayForm to_loose_balanced_primal(const AbsurdNumber& a, std::optional<std::uint64_t> budget = std::nullopt);
DisplayForm to_imperfect_single(const AbsurdNumber& a);
DisplayForm to_imperfect_ratio(const AbsurdNumber& a);
DisplayForm to_max_reciprocal_single(const AbsurdNumber& a);
DisplayForm to_max_reciprocal_ratio(const AbsurdNumber& a);
DisplayForm to_single_min_int_base(const AbsurdNumber& a, std::optional<std::uint64_t> budget = std::nullopt);
DisplayForm to_single_int_imperfect_base(const AbsurdNumber& a);

// Exact value of a form.
AbsurdNumber value_of(const DisplayForm& f);

// First violated kind-specific constraint, if any.
std::optional<std::string> check_form(const DisplayForm& f);

std::string render_text(const DisplayForm& f);
std::string render_latex(const DisplayForm& f);

struct SizeReport {
  FormKind kind;
  std::size_t size = 0;
  bool available = true;  // false when the factoring budget ran out
};

SizeReport size_of(const DisplayForm& f);

struct Selection {
  DisplayForm best;
  std::vector<SizeReport> reports;  // in request order
};

// Smallest rendering among `kinds`; ties go to the earlier kind in the
// recommended order, then listing order. Kinds whose factoring fails are
// reported unavailable. If every requested kind is unavailable the result
// falls back to single_int_imperfect_base.
Selection most_concise(const AbsurdNumber& a, std::span<const FormKind> kinds,
                       std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace absurd
