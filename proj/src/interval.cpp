#include "zsum/interval.hpp"

#include <mpfr.h>

#include <optional>
#include <stdexcept>

namespace zsum {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

Interval interval_min(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

namespace {

// Exact value of an MPFR number as a rational (mantissa * 2^exp).
Rational rational_of_mpfr(const mpfr_t x) {
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
  Rational q(mant);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return q;
}

// One- or two-fold application of ln with uniform directed rounding; rnd
// selects whether the result is an under- or over-estimate of the truth.
// Fails (nullopt) when an intermediate rounds into the outer log's domain
// boundary, which a higher working precision repairs.
std::optional<Rational> directed_log(const Rational& x, int depth, mpfr_prec_t prec,
                                     mpfr_rnd_t rnd) {
  mpfr_t m;
  mpfr_init2(m, prec);
  mpfr_set_q(m, x.get_mpq_t(), rnd);
  std::optional<Rational> out;
  for (int i = 0; i < depth; ++i) {
    if (i > 0 && mpfr_sgn(m) <= 0) {
      mpfr_clear(m);
      return out;  // nullopt
    }
    mpfr_log(m, m, rnd);
  }
  if (mpfr_number_p(m)) out = rational_of_mpfr(m);
  mpfr_clear(m);
  return out;
}

Interval refined_log(const Rational& x, int depth, const Rational& max_width) {
  if (max_width <= 0) throw std::invalid_argument("interval width bound must be positive");
  for (mpfr_prec_t prec = 96;; prec *= 2) {
    if (prec > 1 << 20) throw std::runtime_error("log enclosure failed to converge");
    std::optional<Rational> lo = directed_log(x, depth, prec, MPFR_RNDD);
    std::optional<Rational> hi = directed_log(x, depth, prec, MPFR_RNDU);
    if (lo && hi && *hi - *lo <= max_width) return {std::move(*lo), std::move(*hi)};
  }
}

}  // namespace

Interval log_interval(const Rational& x, const Rational& max_width) {
  if (x <= 0) throw std::domain_error("log_interval requires x > 0");
  if (x == 1) return Interval(Rational(0));
  return refined_log(x, 1, max_width);
}

Interval loglog_interval(const Rational& x, const Rational& max_width) {
  if (x <= 1) throw std::domain_error("loglog_interval requires x > 1");
  return refined_log(x, 2, max_width);
}

}  // namespace zsum
