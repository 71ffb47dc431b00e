#ifndef PLINE_BIGCOMPLEX_HPP
#define PLINE_BIGCOMPLEX_HPP

#include <iosfwd>
#include <string>
#include <utility>

#include "pline/bigfloat.hpp"

namespace pline {

// Complex value with BigFloat components.  Only the operations the circle
// and character maps need; not a general complex library.
class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = kDefaultPrecision)
      : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}

  static BigComplex from_long(long re, long im, mpfr_prec_t prec = kDefaultPrecision) {
    return {BigFloat::from_long(re, prec), BigFloat::from_long(im, prec)};
  }
  // exp(i * theta), on the unit circle.
  static BigComplex unit(const BigFloat& theta);
  static BigComplex i(mpfr_prec_t prec = kDefaultPrecision) {
    return from_long(0, 1, prec);
  }

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }

  BigComplex conj() const { return {re_, -im_}; }
  BigFloat abs() const { return hypot(re_, im_); }

  // Principal logarithm: log|z| + i*atan2(im, re).  Throws DomainError at 0.
  BigComplex log() const;
  // Principal square root.
  BigComplex sqrt() const;

  std::string str() const { return "(" + re_.str() + ", " + im_.str() + ")"; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }

 private:
  BigFloat re_;
  BigFloat im_;
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

}  // namespace pline

#endif  // PLINE_BIGCOMPLEX_HPP
