#include "pline/proj_line.hpp"

namespace pline {

std::string to_string(const PPoint& p) {
  return p.is_infinity() ? "inf" : p.to_affine().str();
}

std::string to_string(const GaussPPoint& p) {
  return p.is_infinity() ? "inf" : p.to_affine().str();
}

PPoint parse_ppoint(std::string_view text) {
  if (text == "inf") return PPoint::infinity();
  return PPoint::affine(Rational::parse(text));
}

}  // namespace pline
