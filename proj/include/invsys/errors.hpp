#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invsys {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define INVSYS_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what) : Error(what) {}    \
  }

INVSYS_DEFINE_ERROR(DivisionByZero);
INVSYS_DEFINE_ERROR(FieldMismatch);
INVSYS_DEFINE_ERROR(LengthMismatch);
INVSYS_DEFINE_ERROR(ShapeMismatch);
INVSYS_DEFINE_ERROR(NotHomogeneous);
INVSYS_DEFINE_ERROR(ZeroPolynomial);
INVSYS_DEFINE_ERROR(NotBinomial);
INVSYS_DEFINE_ERROR(DegenerateBinomial);
INVSYS_DEFINE_ERROR(NotCI);
INVSYS_DEFINE_ERROR(NotArtinian);
INVSYS_DEFINE_ERROR(DegreeOutOfRange);
INVSYS_DEFINE_ERROR(OverlappingSupport);
INVSYS_DEFINE_ERROR(InvalidArgument);
INVSYS_DEFINE_ERROR(UnknownVariable);
INVSYS_DEFINE_ERROR(NegativeExponent);

#undef INVSYS_DEFINE_ERROR

// Parse failure; `position` is a 0-based byte offset into the source.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace invsys
