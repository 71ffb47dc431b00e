#ifndef PLINE_ERRORS_HPP
#define PLINE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pline {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Construction of a rational with denominator zero.
struct ZeroDenominatorError : Error {
  explicit ZeroDenominatorError(const std::string& msg) : Error(msg) {}
};

// Value outside the mathematical domain of an operation.
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Projective action of a matrix with determinant zero.
struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

// Member of a matrix family at a parameter where the family degenerates.
struct SingularFamilyError : Error {
  explicit SingularFamilyError(const std::string& msg) : Error(msg) {}
};

// Malformed textual input.
struct ParseError : Error {
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace pline

#endif  // PLINE_ERRORS_HPP
