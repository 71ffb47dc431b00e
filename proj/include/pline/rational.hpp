#ifndef PLINE_RATIONAL_HPP
#define PLINE_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "pline/errors.hpp"

namespace pline {

// Exact arbitrary-precision rational number, always in canonical form:
// gcd(|num|, den) = 1 and den > 0.  Equality is structural.
class Rational {
 public:
  Rational() { mpq_init(q_); }

  Rational(long n) {  // NOLINT(google-explicit-constructor)
    mpq_init(q_);
    mpq_set_si(q_, n, 1);
  }

  // n/d, reduced, sign moved to the numerator.  Throws on d == 0.
  Rational(long n, long d);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }

  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }

  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }

  ~Rational() { mpq_clear(q_); }

  // Parses "p", "p/q" or "-p/q" in base 10.  Throws ParseError / ZeroDenominatorError.
  static Rational parse(std::string_view text);

  // Numerator and denominator as decimal strings (den > 0).
  std::string num_string() const;
  std::string den_string() const;

  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
  int sign() const { return mpq_sgn(q_); }

  // Numerator fits in long (used by small-value paths).
  bool fits_long() const {
    return mpz_fits_slong_p(mpq_numref(q_)) && mpz_fits_slong_p(mpq_denref(q_));
  }
  long num_long() const { return mpz_get_si(mpq_numref(q_)); }
  long den_long() const { return mpz_get_si(mpq_denref(q_)); }

  double to_double() const { return mpq_get_d(q_); }

  // "p/q" with "/q" omitted when q == 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
  }
  // Exact division; throws DomainError on b == 0.
  friend Rational operator/(const Rational& a, const Rational& b);

  friend Rational operator-(const Rational& a) {
    Rational r;
    mpq_neg(r.q_, a.q_);
    return r;
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }

  Rational inverse() const;  // throws DomainError on zero
  Rational abs() const {
    Rational r;
    mpq_abs(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

// Convenience literal-style constructor: rat(2, 4) == 1/2.
Rational rat(long n, long d);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Gaussian rational re + i*im with exact component arithmetic.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussRational(long re) : re_(re), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(const Rational& re) : re_(re), im_(0) {}  // NOLINT

  static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

  // Parses "a", "a+bi", "a-bi", "bi", "i", "-i" with rational a, b.
  static GaussRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRational inverse() const;  // throws DomainError on zero

  std::string str() const;

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inverse();
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) {
    return !(a == b);
  }

 private:
  Rational re_;
  Rational im_;
};

inline GaussRational gauss_mul(const GaussRational& z, const GaussRational& w) {
  return z * w;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

}  // namespace pline

#endif  // PLINE_RATIONAL_HPP
