#include "pline/bigcomplex.hpp"

#include <ostream>

namespace pline {

BigComplex BigComplex::unit(const BigFloat& theta) {
  BigFloat s(theta.precision()), c(theta.precision());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return {c, s};
}

BigComplex BigComplex::log() const {
  BigFloat m = abs();
  if (m.is_zero()) throw DomainError("log of complex zero");
  return {pline::log(m), atan2(im_, re_)};
}

BigComplex BigComplex::sqrt() const {
  BigFloat m = abs();
  if (m.is_zero()) return BigComplex(precision());
  BigFloat r = pline::sqrt(m);
  BigFloat half_arg = mul_pow2(atan2(im_, re_), -1);
  BigComplex u = unit(half_arg);
  return {r * u.re(), r * u.im()};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = b.re() * b.re() + b.im() * b.im();
  if (n.is_zero()) throw DomainError("complex division by zero");
  BigComplex num = a * b.conj();
  return {num.re() / n, num.im() / n};
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
  return os << z.str();
}

}  // namespace pline
