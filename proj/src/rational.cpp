#include "pline/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace pline {

Rational::Rational(long n, long d) {
  if (d == 0) throw ZeroDenominatorError("rational with zero denominator");
  mpq_init(q_);
  mpq_set_si(q_, n, 1);
  mpq_t den;
  mpq_init(den);
  mpq_set_si(den, d, 1);
  mpq_div(q_, q_, den);
  mpq_clear(den);
}

Rational rat(long n, long d) { return Rational(n, d); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  if (!valid(num) || !valid(den))
    throw ParseError("not a rational literal: \"" + s + "\"");
  Rational r;
  mpz_t n, d;
  mpz_init_set_str(n, num.c_str(), 10);
  mpz_init_set_str(d, den.c_str(), 10);
  if (mpz_sgn(d) == 0) {
    mpz_clear(n);
    mpz_clear(d);
    throw ZeroDenominatorError("rational with zero denominator: \"" + s + "\"");
  }
  mpq_set_num(r.q_, n);
  mpq_set_den(r.q_, d);
  mpq_canonicalize(r.q_);
  mpz_clear(n);
  mpz_clear(d);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("rational division by zero");
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

namespace {
std::string mpz_to_string(mpz_srcptr z) {
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string s(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, s.size() + 1);
  return s;
}
}  // namespace

std::string Rational::num_string() const { return mpz_to_string(mpq_numref(q_)); }
std::string Rational::den_string() const { return mpz_to_string(mpq_denref(q_)); }

std::string Rational::str() const {
  std::string s = num_string();
  if (!is_integer()) s += "/" + den_string();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GaussRational GaussRational::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw DomainError("inverse of zero");
  return {re_ / n, -im_ / n};
}

std::string GaussRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  Rational a = im_.abs();
  if (a == Rational(1)) {
    imag = "i";
  } else {
    imag = a.str() + "i";
  }
  if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
  return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

GaussRational GaussRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return GaussRational(Rational::parse(s));

  // Strip the trailing 'i' and split off the real part, if any.  The split
  // point is the last top-level '+'/'-' that is not a leading sign.
  std::string body = s.substr(0, s.size() - 1);
  size_t split = std::string::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = body;
  } else {
    re_part = body.substr(0, split);
    im_part = body.substr(split);  // keeps the sign
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return {Rational::parse(re_part), Rational::parse(im_part)};
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) {
  return os << z.str();
}

}  // namespace pline
