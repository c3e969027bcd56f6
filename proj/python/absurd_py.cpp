#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "absurd/error.hpp"
#include "absurd/expr.hpp"
#include "absurd/fixtures.hpp"
#include "absurd/forms.hpp"
#include "absurd/settings.hpp"

namespace py = pybind11;

namespace {

absurd::SumRenderOptions render_options(const std::optional<std::string>& form, const std::string& layout, bool latex) {
  absurd::SumRenderOptions o;
  if (form && *form != "auto") o.kind = absurd::parse_form_kind(*form);
  if (layout != "product" && layout != "ratio") {
    throw absurd::AbsurdError(absurd::Errc::InvalidArgument, "layout must be 'product' or 'ratio'");
  }
  o.layout = layout == "ratio" ? absurd::Layout::ratio : absurd::Layout::product;
  o.latex = latex;
  return o;
}

std::vector<std::string> canonical_terms(const absurd::SumOfAbsurds& s) {
  std::vector<std::string> out;
  for (const auto& t : s.terms) out.push_back(absurd::to_canonical_string(t));
  return out;
}

}  // namespace

PYBIND11_MODULE(absurd, m) {
  m.doc() = "Exact simplification and display of absurd numbers";

  static py::exception<absurd::AbsurdError> error(m, "AbsurdError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const absurd::AbsurdError& e) {
      py::set_error(error, (std::string(absurd::errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "simplify",
      [](const std::string& expr) { return canonical_terms(absurd::simplify(expr)); },
      py::arg("expr"), "Simplified terms in canonical serialization; [] means zero.");

  m.def(
      "render",
      [](const std::string& expr, std::optional<std::string> form, const std::string& layout, bool latex) {
        return absurd::render_sum(absurd::simplify(expr), render_options(form, layout, latex)).text;
      },
      py::arg("expr"), py::arg("form") = py::none(), py::arg("layout") = "product", py::arg("latex") = false);

  m.def(
      "equal",
      [](const std::string& a, const std::string& b) {
        const auto diff = absurd::Expr::binary(absurd::Expr::Kind::subtract, absurd::parse(a), absurd::parse(b));
        return absurd::simplify(*diff).is_zero();
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "alts",
      [](const std::string& expr) {
        const auto s = absurd::simplify(expr);
        if (s.terms.size() != 1) throw absurd::AbsurdError(absurd::Errc::MultiTermResult, "expected a single term");
        std::vector<std::tuple<std::string, std::optional<std::string>, std::optional<std::size_t>>> rows;
        const auto sel = absurd::most_concise(s.terms[0], absurd::kAllFormKinds);
        for (const auto& r : sel.reports) {
          if (!r.available) {
            rows.emplace_back(std::string(absurd::form_name(r.kind)), std::nullopt, std::nullopt);
            continue;
          }
          rows.emplace_back(std::string(absurd::form_name(r.kind)),
                            absurd::render_text(absurd::to_form(s.terms[0], r.kind)), r.size);
        }
        return rows;
      },
      py::arg("expr"), "(form name, rendering, size) for every display form.");

  m.def(
      "canonical",
      [](const std::string& text) { return absurd::to_canonical_string(absurd::parse_canonical(text)); },
      py::arg("text"), "Validates a canonical serialization.");

  m.def("form_names", [] {
    std::vector<std::string> names;
    for (auto k : absurd::kAllFormKinds) names.emplace_back(absurd::form_name(k));
    return names;
  });

  m.def(
      "configure",
      [](std::optional<unsigned long> phat, std::optional<std::uint64_t> budget) {
        absurd::Settings s = absurd::settings();
        if (phat) s.small_prime_bound = *phat;
        if (budget) s.factor_budget = *budget;
        absurd::set_settings(s);
      },
      py::arg("phat") = py::none(), py::arg("budget") = py::none());

  m.def("fixture", [](const std::string& which) {
    absurd::FixtureResult r;
    if (which == "table1") r = absurd::fixture_table1();
    else if (which == "table2") r = absurd::fixture_table2();
    else if (which == "table3") r = absurd::fixture_table3();
    else if (which == "newton-bench") r = absurd::fixture_newton_bench();
    else throw absurd::AbsurdError(absurd::Errc::InvalidArgument, "unknown fixture: " + which);
    return py::make_tuple(r.passed, r.report);
  });
}
