#include <algorithm>

#include "absurd/core.hpp"
#include "absurd/error.hpp"

namespace absurd {

Approximation eval_approx(const AbsurdNumber& a, mpfr_prec_t precision_bits) {
  if (precision_bits < 2) throw AbsurdError(Errc::InvalidArgument, "precision must be at least 2 bits");
  const mpfr_prec_t w = precision_bits + 64;
  Approximation out{BigFloat(w), BigFloat(w)};
  mpfr_ptr v = out.value.get();

  // Relative error is tracked in units of 2^-w; each correctly rounded step
  // adds one, a k-th root divides the incoming error by k and a power n
  // multiplies it by n.
  unsigned long units = 0;
  mpfr_set_q(v, a.coefficient().get_mpq_t(), MPFR_RNDN);
  units += 1;

  BigFloat term(w);
  mpfr_ptr t = term.get();
  for (const auto& f : a.factors()) {
    const unsigned long n = f.exponent.get_num().get_ui();
    const unsigned long d = f.exponent.get_den().get_ui();
    mpfr_set_z(t, f.base.get_mpz_t(), MPFR_RNDN);
    mpfr_rootn_ui(t, t, d, MPFR_RNDN);
    mpfr_pow_ui(t, t, n, MPFR_RNDN);
    // set, root, pow: n*(1/d + 1) + 1 < n + 2
    units += n + 2;
    mpfr_mul(v, v, t, MPFR_RNDN);
    units += 1;
  }

  // bound = |v| * units * 2^-w * 1.01, rounded up
  mpfr_ptr e = out.error_bound.get();
  mpfr_abs(e, v, MPFR_RNDU);
  mpfr_mul_ui(e, e, units * 101, MPFR_RNDU);
  mpfr_div_ui(e, e, 100, MPFR_RNDU);
  mpfr_mul_2si(e, e, -static_cast<long>(w), MPFR_RNDU);
  return out;
}

bool approx_agree(const Approximation& a, const Approximation& b) {
  const mpfr_prec_t p = std::max(a.value.precision(), b.value.precision()) + 8;
  BigFloat diff(p), slack(p);
  mpfr_sub(diff.get(), a.value.get(), b.value.get(), MPFR_RNDZ);
  mpfr_abs(diff.get(), diff.get(), MPFR_RNDZ);
  mpfr_add(slack.get(), a.error_bound.get(), b.error_bound.get(), MPFR_RNDU);
  return mpfr_lessequal_p(diff.get(), slack.get()) != 0;
}

}  // namespace absurd
