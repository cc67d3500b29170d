#include "zsum/rational.hpp"

namespace zsum {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  q.canonicalize();
  return q;
}

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(|q| * 10^digits) with half away from zero
  Integer num = abs(q.get_num()) * scale;
  Integer den = q.get_den();
  Integer quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (rem * 2 >= den) quot += 1;
  std::string s = quot.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (sgn(q) < 0) out += '-';
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    out += '.';
    out += s.substr(s.size() - digits);
  }
  return out;
}

Integer floor_rational(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

}  // namespace zsum
