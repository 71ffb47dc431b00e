#ifndef PLINE_PROJ_LINE_HPP
#define PLINE_PROJ_LINE_HPP

#include <string>
#include <string_view>

#include "pline/errors.hpp"
#include "pline/rational.hpp"

namespace pline {

// Point [a : b] of the projective line over an exact scalar field, kept in
// canonical form: b == 1 for affine points, (a, b) == (1, 0) for infinity.
// The group law (x + y)/(1 - xy) is implemented homogeneously, so it is
// total: the point at infinity and the xy == 1 singularity need no cases.
template <class S>
class ProjPoint {
 public:
  ProjPoint() : a_(S(0)), b_(S(1)) {}  // the unit 0

  static ProjPoint affine(S x) {
    ProjPoint p;
    p.a_ = std::move(x);
    return p;
  }

  static ProjPoint infinity() {
    ProjPoint p;
    p.a_ = S(1);
    p.b_ = S(0);
    return p;
  }

  // [a : b]; throws DomainError on (0, 0).
  static ProjPoint homogeneous(const S& a, const S& b) {
    if (a.is_zero() && b.is_zero())
      throw DomainError("projective point [0 : 0]");
    ProjPoint p;
    if (b.is_zero()) {
      p.a_ = S(1);
      p.b_ = S(0);
    } else {
      p.a_ = a / b;
      p.b_ = S(1);
    }
    return p;
  }

  bool is_infinity() const { return b_.is_zero(); }
  bool is_zero() const { return !is_infinity() && a_.is_zero(); }

  // Affine coordinate; throws DomainError at infinity.
  const S& to_affine() const {
    if (is_infinity()) throw DomainError("affine coordinate of infinity");
    return a_;
  }

  const S& ca() const { return a_; }
  const S& cb() const { return b_; }

  friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const ProjPoint& x, const ProjPoint& y) {
    return !(x == y);
  }

 private:
  S a_;
  S b_;
};

// x +_P y = [x0*y1 + x1*y0 : x1*y1 - x0*y0].
template <class S>
ProjPoint<S> pp_add(const ProjPoint<S>& x, const ProjPoint<S>& y) {
  return ProjPoint<S>::homogeneous(x.ca() * y.cb() + x.cb() * y.ca(),
                                   x.cb() * y.cb() - x.ca() * y.ca());
}

template <class S>
ProjPoint<S> pp_neg(const ProjPoint<S>& x) {
  return ProjPoint<S>::homogeneous(-x.ca(), x.cb());
}

template <class S>
ProjPoint<S> pp_sub(const ProjPoint<S>& x, const ProjPoint<S>& y) {
  return pp_add(x, pp_neg(y));
}

// The involution x -> 1/x, swapping 0 and infinity.
template <class S>
ProjPoint<S> pp_inv(const ProjPoint<S>& x) {
  return ProjPoint<S>::homogeneous(x.cb(), x.ca());
}

// n-fold group sum by binary doubling; negation for n < 0.
template <class S>
ProjPoint<S> pp_mul_n(long n, const ProjPoint<S>& x) {
  ProjPoint<S> acc;  // unit
  if (n == 0) return acc;
  ProjPoint<S> base = n < 0 ? pp_neg(x) : x;
  unsigned long k = n < 0 ? 0ul - static_cast<unsigned long>(n)
                          : static_cast<unsigned long>(n);
  while (k > 0) {
    if (k & 1ul) acc = pp_add(acc, base);
    k >>= 1;
    if (k > 0) base = pp_add(base, base);
  }
  return acc;
}

// Cross-ratio (x01/x02)(x23/x13) with differences cleared of denominators,
// so arguments at infinity are legal.  Requires at least three of the four
// points pairwise distinct.
template <class S>
ProjPoint<S> cross_ratio(const ProjPoint<S>& p0, const ProjPoint<S>& p1,
                         const ProjPoint<S>& p2, const ProjPoint<S>& p3) {
  const ProjPoint<S>* p[4] = {&p0, &p1, &p2, &p3};
  int distinct = 0;
  for (int i = 0; i < 4; ++i) {
    bool fresh = true;
    for (int j = 0; j < i && fresh; ++j)
      if (*p[i] == *p[j]) fresh = false;
    if (fresh) ++distinct;
  }
  if (distinct < 3)
    throw DomainError("cross-ratio of fewer than three distinct points");
  auto diff = [](const ProjPoint<S>& u, const ProjPoint<S>& v) {
    return u.ca() * v.cb() - v.ca() * u.cb();
  };
  return ProjPoint<S>::homogeneous(diff(p0, p1) * diff(p2, p3),
                                   diff(p0, p2) * diff(p1, p3));
}

using PPoint = ProjPoint<Rational>;
using GaussPPoint = ProjPoint<GaussRational>;

inline GaussPPoint to_gauss(const PPoint& p) {
  if (p.is_infinity()) return GaussPPoint::infinity();
  return GaussPPoint::affine(GaussRational(p.to_affine()));
}

// "p/q" for affine points, "inf" for infinity.
std::string to_string(const PPoint& p);
std::string to_string(const GaussPPoint& p);
// Parses "p/q", "p" or "inf".
PPoint parse_ppoint(std::string_view text);

}  // namespace pline

#endif  // PLINE_PROJ_LINE_HPP
