#include <doctest.h>

#include "absurd/error.hpp"
#include "absurd/expr.hpp"
#include "absurd/fixtures.hpp"
#include "absurd/forms.hpp"
#include "oracle/oracle.hpp"

using namespace absurd;

namespace {

AbsurdNumber value(const std::string& text) {
  const auto s = simplify(text);
  return s.is_zero() ? AbsurdNumber() : s.terms.at(0);
}

std::string text(const std::string& expr, FormKind k, Layout layout = Layout::product) {
  DisplayForm f = to_form(value(expr), k);
  f.layout = layout;
  return render_text(f);
}

const std::string kTable1 = "28^(2/3)/15^(2/3)";

}  // namespace

TEST_CASE("form names and numbers") {
  CHECK(form_name(FormKind::pure_primal) == "pure_primal");
  CHECK(form_number(FormKind::single_int_imperfect_base) == 16);
  CHECK(parse_form_kind("tight") == FormKind::tight_balanced_primal);
  CHECK(parse_form_kind("coprime_sqfree_rat_tight") == FormKind::coprime_sqfree_rat_tight);
  CHECK_THROWS_AS(parse_form_kind("coprime"), AbsurdError);  // ambiguous prefix
  CHECK_THROWS_AS(parse_form_kind("nonsense"), AbsurdError);
  for (FormKind k : kAllFormKinds) CHECK(parse_form_kind(form_name(k)) == k);
}

TEST_CASE("table1 fixture value in all 16 product forms") {
  const AbsurdNumber x = value(kTable1);
  for (const auto& e : table1_entries()) {
    CAPTURE(e.number);
    const DisplayForm f = to_form(x, e.kind);
    CHECK(render_text(f) == e.product_form);
    CHECK_FALSE(check_form(f).has_value());
    CHECK(equals(value_of(f), x));
  }
}

TEST_CASE("primal forms") {
  CHECK(text("-2^(1/2)*5^(-5/3)", FormKind::pure_primal) == "-2^(1/2)*5^(-5/3)");
  CHECK(text("1", FormKind::pure_primal) == "1");
  CHECK(text("2^(2/3)", FormKind::tight_balanced_primal) == "2*2^(-1/3)");
  CHECK(text("2^(2/3)", FormKind::tight_balanced_primal, Layout::ratio) == "2/2^(1/3)");
  CHECK(text("-3*2^(1/2)/2", FormKind::proper_primal, Layout::ratio) == "-3*2^(1/2)/2");
}

TEST_CASE("coprime square-free forms") {
  CHECK(text("5^(1/2)*6^(1/2)*7^(1/3)", FormKind::coprime_sqfree_int_distinct) == "7^(1/3)*30^(1/2)");
  CHECK(text("2910600^(1/2)", FormKind::coprime_sqfree_int_proper) == "210*66^(1/2)");
}

TEST_CASE("imperfect and reciprocal forms") {
  const std::string big = "(2159424054808578564166497528588784562372597429/2)^(1/10)";
  CHECK(text("29^(31/10)/2^(1/10)", FormKind::imperfect_single) == big);
  CHECK(text("29^(31/10)/2^(1/10)", FormKind::max_reciprocal_single) == big);
  CHECK(text("56^(1/4)/45^(1/3)", FormKind::imperfect_single) == "(175616/4100625)^(1/12)");
  CHECK(text("56^(1/4)/45^(1/3)", FormKind::imperfect_ratio) == "45^(-1/3)*56^(1/4)");
  CHECK(text("(9/4)^(1/4)", FormKind::max_reciprocal_single) == "(3/2)^(1/2)");
}

TEST_CASE("reabsorption gives one canonical imperfect form") {
  CHECK(text("48/5*(3/5)^(1/3)", FormKind::imperfect_single) == "(24/5)^(4/3)");
  CHECK(text("24/5*(24/5)^(1/3)", FormKind::imperfect_single) == "(24/5)^(4/3)");
  CHECK(text("(576/25)^(2/3)", FormKind::imperfect_single) == "(24/5)^(4/3)");
}

TEST_CASE("single-base forms") {
  CHECK(text(kTable1, FormKind::single_int_imperfect_base, Layout::ratio) == "11760^(1/3)/15");
  CHECK(text(kTable1, FormKind::single_min_int_base_proper) == "2/15*1470^(1/3)");
}

TEST_CASE("LaTeX rendering") {
  DisplayForm f = to_form(value(kTable1), FormKind::single_min_int_base_proper);
  CHECK(render_latex(f) == "\\frac{2}{15}\\,1470^{1/3}");
  CHECK(render_latex(to_form(value("-3*sqrt(2)/2"), FormKind::proper_primal)) == "-\\frac{3}{2}\\,\\sqrt{2}");
}

TEST_CASE("factoring budget exhaustion keeps a flagged partial form") {
  const std::string n = "(100000000000000000000000000319*100000000000000000000000000379)^(1/2)";
  const AbsurdNumber x = value(n);
  try {
    to_form(x, FormKind::pure_primal, 1);
    FAIL("expected FactoringBudgetExhausted");
  } catch (const FactoringBudgetExhausted& e) {
    CHECK_FALSE(e.partial().complete);
    CHECK(equals(value_of(e.partial()), x));
  }
  // Forms that never factor still work.
  CHECK_NOTHROW(to_form(x, FormKind::imperfect_single, 1));
  const Selection sel = most_concise(x, kAllFormKinds, 1);
  CHECK(sel.best.kind == FormKind::imperfect_single);
  int unavailable = 0;
  for (const auto& r : sel.reports) unavailable += !r.available;
  CHECK(unavailable == 11);
}

TEST_CASE("most_concise") {
  const AbsurdNumber x = value(kTable1);
  CHECK(most_concise(x, kRecommendedFormKinds).best.kind == FormKind::single_min_int_base_proper);
  const Selection all = most_concise(x, kAllFormKinds);
  CHECK(all.best.kind == FormKind::imperfect_single);
  REQUIRE(all.reports.size() == 16);
  for (const auto& r : all.reports) CHECK(r.size >= size_of(all.best).size);
}

TEST_CASE("rendering is deterministic") {
  for (FormKind k : kAllFormKinds) CHECK(text(kTable1, k) == text("2^(4/3)*7^(2/3)/(3^(2/3)*5^(2/3))", k));
}

TEST_CASE("forms preserve value and satisfy their constraints on random values") {
  oracle::Generator g(7);
  for (int i = 0; i < 200; ++i) {
    const oracle::RawValue raw = g.value();
    const AbsurdNumber x = assemble(raw.coef, raw.radicals_flat());
    if (x.is_zero()) continue;
    const Approximation ax = eval_approx(x, 256);
    for (FormKind k : kAllFormKinds) {
      const DisplayForm f = to_form(x, k);
      CAPTURE(to_canonical_string(x));
      CAPTURE(form_name(k));
      CHECK_FALSE(check_form(f).has_value());
      CHECK(equals(value_of(f), x));
      CHECK(oracle::near(oracle::eval_form(f, 320), ax.value, 240, &ax.error_bound));
    }
  }
}
