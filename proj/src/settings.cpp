#include "absurd/settings.hpp"

#include "absurd/error.hpp"

namespace absurd {

namespace {
Settings g_settings;
}

const Settings& settings() noexcept { return g_settings; }

void set_settings(const Settings& s) {
  if (s.small_prime_bound < 2) {
    throw AbsurdError(Errc::InvalidArgument, "small prime bound must be at least 2");
  }
  g_settings = s;
}

ScopedSettings::ScopedSettings(const Settings& s) : saved_(g_settings) { set_settings(s); }

ScopedSettings::~ScopedSettings() { g_settings = saved_; }

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPositiveBase: return "NonPositiveBase";
    case Errc::ZeroToNegativePower: return "ZeroToNegativePower";
    case Errc::NegativeBaseFractionalPower: return "NegativeBaseFractionalPower";
    case Errc::Indeterminate: return "Indeterminate";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::UnsupportedDenominator: return "UnsupportedDenominator";
    case Errc::FractionalPowerOfSum: return "FractionalPowerOfSum";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::NonRationalExponent: return "NonRationalExponent";
    case Errc::FactoringBudgetExhausted: return "FactoringBudgetExhausted";
    case Errc::MultiTermResult: return "MultiTermResult";
    case Errc::Overflow: return "Overflow";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace absurd
