#ifndef PLINE_BIGFLOAT_HPP
#define PLINE_BIGFLOAT_HPP

#include <mpfr.h>

#include <iosfwd>
#include <string>
#include <string_view>

#include "pline/errors.hpp"
#include "pline/rational.hpp"

namespace pline {

inline constexpr mpfr_prec_t kDefaultPrecision = 192;

// Correctly rounded floating-point value at an explicit bit precision.
// Every value carries its precision; binary operations round to the larger
// of the operand precisions.  Rounding mode is always to-nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_long(long x, mpfr_prec_t prec = kDefaultPrecision);
  static BigFloat from_double(double x, mpfr_prec_t prec = kDefaultPrecision);
  static BigFloat from_rational(const Rational& r, mpfr_prec_t prec = kDefaultPrecision);
  // Accepts decimal floats and "p/q" rationals.  Throws ParseError.
  static BigFloat parse(std::string_view text, mpfr_prec_t prec = kDefaultPrecision);

  static BigFloat pi(mpfr_prec_t prec = kDefaultPrecision);
  static BigFloat pos_inf(mpfr_prec_t prec = kDefaultPrecision);
  static BigFloat neg_inf(mpfr_prec_t prec = kDefaultPrecision);
  // 2^e at the given precision (exact).
  static BigFloat pow2(long e, mpfr_prec_t prec = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  // Same value rounded to a different precision.
  BigFloat at_precision(mpfr_prec_t prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal string with enough digits to round-trip at this precision.
  std::string str() const;
  std::string str(size_t digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);  // throws DomainError for x <= 0
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat tan(const BigFloat& x);
BigFloat atan(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat artanh(const BigFloat& x);  // throws DomainError for |x| >= 1
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat floor(const BigFloat& x);
BigFloat ceil(const BigFloat& x);
// x * 2^e (exact).
BigFloat mul_pow2(const BigFloat& x, long e);

std::ostream& operator<<(std::ostream& os, const BigFloat& x);

}  // namespace pline

#endif  // PLINE_BIGFLOAT_HPP
