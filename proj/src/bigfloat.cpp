#include "pline/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <vector>

namespace pline {

namespace {
mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat BigFloat::from_long(long x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_double(double x, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, q.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse(std::string_view text, mpfr_prec_t prec) {
  std::string s(text);
  if (s.find('/') != std::string::npos)
    return from_rational(Rational::parse(s), prec);
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end == s.c_str() || *end != '\0')
    throw ParseError("not a number: \"" + s + "\"");
  return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pos_inf(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_inf(r.v_, 1);
  return r;
}

BigFloat BigFloat::neg_inf(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_inf(r.v_, -1);
  return r;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::at_precision(mpfr_prec_t prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str() const {
  // ceil(prec * log10(2)) + 2 digits guarantee decimal round-trip.
  size_t digits = static_cast<size_t>(precision() * 0.30103) + 3;
  return str(digits);
}

std::string BigFloat::str(size_t digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() > 0 ? "inf" : "-inf";
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", static_cast<int>(digits - 1), v_);
  return std::string(buf.data());
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

#define PLINE_UNARY(name, fn)                    \
  BigFloat name(const BigFloat& x) {             \
    BigFloat r(x.precision());                   \
    fn(r.raw(), x.raw(), MPFR_RNDN);             \
    return r;                                    \
  }

PLINE_UNARY(sqrt, mpfr_sqrt)
PLINE_UNARY(exp, mpfr_exp)
PLINE_UNARY(sin, mpfr_sin)
PLINE_UNARY(cos, mpfr_cos)
PLINE_UNARY(tan, mpfr_tan)
PLINE_UNARY(atan, mpfr_atan)

#undef PLINE_UNARY

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat log(const BigFloat& x) {
  if (x.sign() <= 0 && !x.is_nan())
    throw DomainError("log of a non-positive value");
  BigFloat r(x.precision());
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat artanh(const BigFloat& x) {
  if (!(abs(x) < BigFloat::from_long(1, x.precision())))
    throw DomainError("artanh outside (-1, 1)");
  BigFloat r(x.precision());
  mpfr_atanh(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(max_prec(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat floor(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

BigFloat ceil(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_ceil(r.raw(), x.raw());
  return r;
}

BigFloat mul_pow2(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

}  // namespace pline
