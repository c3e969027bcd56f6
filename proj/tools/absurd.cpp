// absurd: simplify, compare and display exact absurd numbers.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <string>

#include "absurd/error.hpp"
#include "absurd/expr.hpp"
#include "absurd/fixtures.hpp"
#include "absurd/forms.hpp"
#include "absurd/settings.hpp"

namespace {

using absurd::AbsurdError;
using absurd::Errc;
using nlohmann::json;

enum Exit : int {
  kOk = 0,
  kError = 1,
  kIndeterminate = 2,
  kDivisionByZero = 3,
  kUnequal = 4,
  kFixtureMismatch = 5,
};

struct Options {
  unsigned long phat = 1000;
  std::uint64_t budget = 1'000'000;
  std::string form = "auto";
  std::string output = "text";
  std::string layout = "product";
};

std::string read_expression(const std::string& arg) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  return text;
}

std::string fraction(const absurd::Rational& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

json form_json(const absurd::DisplayForm& f, const absurd::AbsurdNumber& value) {
  json terms = json::array();
  for (const auto& t : f.terms) terms.push_back({{"base", absurd::to_string(t.base)}, {"exp", fraction(t.exponent)}});
  return {{"form", std::string(absurd::form_name(f.kind))},
          {"coefficient", fraction(f.coefficient)},
          {"terms", terms},
          {"size", absurd::size_of(f).size},
          {"canonical", absurd::to_canonical_string(value)}};
}

absurd::Layout parse_layout(const std::string& s) {
  return s == "ratio" ? absurd::Layout::ratio : absurd::Layout::product;
}

std::optional<absurd::FormKind> parse_kind(const std::string& s) {
  if (s == "auto") return std::nullopt;
  return absurd::parse_form_kind(s);
}

int run_simplify(const Options& o, const std::string& expr) {
  const absurd::SumOfAbsurds s = absurd::simplify(read_expression(expr));
  absurd::SumRenderOptions ro;
  ro.kind = parse_kind(o.form);
  ro.layout = parse_layout(o.layout);
  ro.latex = o.output == "latex";
  ro.budget = o.budget;
  const absurd::RenderedSum r = absurd::render_sum(s, ro);

  if (o.output != "json") {
    std::cout << r.text << "\n";
    return kOk;
  }
  if (s.is_zero()) {
    std::cout << json{{"form", "rational"}, {"coefficient", "0/1"}, {"terms", json::array()}, {"size", 1}, {"canonical", "0/1"}}.dump()
              << "\n";
    return kOk;
  }
  json items = json::array();
  for (std::size_t i = 0; i < s.terms.size(); ++i) items.push_back(form_json(r.forms[i], s.terms[i]));
  std::cout << (items.size() == 1 ? items[0] : json{{"sum", items}, {"size", r.text.size()}}).dump() << "\n";
  return kOk;
}

int run_alts(const Options& o, const std::string& expr) {
  const absurd::SumOfAbsurds s = absurd::simplify(read_expression(expr));
  if (s.terms.size() > 1) throw AbsurdError(Errc::MultiTermResult, "expression is an irreducible sum of " + std::to_string(s.terms.size()) + " terms");
  const absurd::AbsurdNumber value = s.is_zero() ? absurd::AbsurdNumber() : s.terms[0];
  const bool as_json = o.output == "json";

  if (value.is_rational()) {
    const std::string text = absurd::to_string(value.coefficient());
    if (as_json) {
      std::cout << json::array({{{"form", "rational"}, {"rendering", text}, {"size", text.size()}, {"best", true}}}).dump() << "\n";
    } else {
      std::cout << "*  rational                     " << text << "  [" << text.size() << "]\n";
    }
    return kOk;
  }

  const absurd::Selection sel = absurd::most_concise(value, absurd::kAllFormKinds, o.budget);
  json rows = json::array();
  for (const auto& rep : sel.reports) {
    std::string rendering = "unavailable (factoring budget)";
    if (rep.available) {
      absurd::DisplayForm f = absurd::to_form(value, rep.kind, o.budget);
      f.layout = parse_layout(o.layout);
      rendering = o.output == "latex" ? absurd::render_latex(f) : absurd::render_text(f);
    }
    const bool best = rep.available && rep.kind == sel.best.kind;
    const std::string name(absurd::form_name(rep.kind));
    if (as_json) {
      json row = {{"number", absurd::form_number(rep.kind)}, {"form", name}, {"rendering", rendering}, {"best", best}};
      row["size"] = rep.available ? json(rep.size) : json(nullptr);
      rows.push_back(row);
    } else {
      std::string num = std::to_string(absurd::form_number(rep.kind));
      std::cout << (best ? "* " : "  ") << (num.size() < 2 ? " " : "") << num << " " << name
                << std::string(name.size() < 28 ? 28 - name.size() : 1, ' ') << rendering;
      if (rep.available) std::cout << "  [" << rep.size << "]";
      std::cout << "\n";
    }
  }
  if (as_json) std::cout << rows.dump() << "\n";
  return kOk;
}

int run_eq(const std::string& a, const std::string& b) {
  const auto left = absurd::parse(read_expression(a));
  const auto right = absurd::parse(read_expression(b));
  const auto diff = absurd::Expr::binary(absurd::Expr::Kind::subtract, left, right);
  const bool equal = absurd::simplify(*diff).is_zero();
  std::cout << (equal ? "equal" : "unequal") << "\n";
  return equal ? kOk : kUnequal;
}

int run_fixtures(const std::string& which) {
  bool passed = true;
  auto one = [&](const char* name, absurd::FixtureResult (*fn)()) {
    const absurd::FixtureResult r = fn();
    std::cout << "== " << name << (r.passed ? " (pass)" : " (MISMATCH)") << "\n" << r.report;
    passed &= r.passed;
  };
  const bool all = which == "all";
  if (all || which == "table1") one("table1", absurd::fixture_table1);
  if (all || which == "table2") one("table2", absurd::fixture_table2);
  if (all || which == "table3") one("table3", absurd::fixture_table3);
  if (all || which == "newton-bench") one("newton-bench", absurd::fixture_newton_bench);
  return passed ? kOk : kFixtureMismatch;
}

int exit_code_for(const AbsurdError& e) {
  switch (e.code()) {
    case Errc::Indeterminate: return kIndeterminate;
    case Errc::DivisionByZero:
    case Errc::ZeroToNegativePower: return kDivisionByZero;
    default: return kError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact simplification and display of absurd numbers"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--phat", o.phat, "Trial-division prime bound")->envname("ABSURD_PHAT")->check(CLI::Range(2UL, 1UL << 26));
  app.add_option("--budget", o.budget, "Pollard-rho iterations per factorization")->envname("ABSURD_BUDGET");
  app.add_option("--form", o.form, "Display form name, unique prefix, or auto")->capture_default_str();
  app.add_option("--output", o.output, "text, latex or json")
      ->check(CLI::IsMember({"text", "latex", "json"}))
      ->capture_default_str();
  app.add_option("--layout", o.layout, "product or ratio")->check(CLI::IsMember({"product", "ratio"}))->capture_default_str();

  std::string expr, expr_b, which;
  auto* simplify_cmd = app.add_subcommand("simplify", "Simplify an expression ('-' reads stdin)");
  simplify_cmd->add_option("expr", expr)->required();
  auto* alts_cmd = app.add_subcommand("alts", "List every display form with its size");
  alts_cmd->add_option("expr", expr)->required();
  auto* eq_cmd = app.add_subcommand("eq", "Test two expressions for equality");
  eq_cmd->add_option("a", expr)->required();
  eq_cmd->add_option("b", expr_b)->required();
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Run reference fixtures");
  fixtures_cmd->add_option("which", which)
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "table3", "newton-bench", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }

  try {
    absurd::Settings s = absurd::settings();
    s.small_prime_bound = o.phat;
    s.factor_budget = o.budget;
    absurd::set_settings(s);
    if (o.form != "auto") absurd::parse_form_kind(o.form);

    if (*simplify_cmd) return run_simplify(o, expr);
    if (*alts_cmd) return run_alts(o, expr);
    if (*eq_cmd) return run_eq(expr, expr_b);
    if (*fixtures_cmd) return run_fixtures(which);
  } catch (const AbsurdError& e) {
    if (e.code() == Errc::Indeterminate) {
      std::cout << "indeterminate (0/0)\n";
    } else {
      std::cerr << "error: " << absurd::errc_name(e.code()) << ": " << e.what() << "\n";
    }
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
