#pragma once

#include <stdexcept>
#include <string>

namespace qproj {

/// Base class of every domain error raised by the library.  The CLI maps
/// these to exit code 1; anything else escaping is a bug.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define QPROJ_DEFINE_ERROR(Name)                                              \
  class Name : public Error {                                                 \
  public:                                                                     \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}      \
  };

/// Exact division of Laurent polynomials failed (non-zero remainder).
QPROJ_DEFINE_ERROR(NotDivisible)
/// An operation that needs a non-zero polynomial received zero.
QPROJ_DEFINE_ERROR(ZeroPolynomial)
/// Malformed textual input (polynomials, words, digit lists).
QPROJ_DEFINE_ERROR(ParseError)
/// A projective point with numerator and denominator both zero.
QPROJ_DEFINE_ERROR(BothZero)
/// A Möbius image that would be 0/0.
QPROJ_DEFINE_ERROR(Indeterminate)
/// A matrix whose determinant is not of the form ±q^a t^b.
QPROJ_DEFINE_ERROR(NotInvertible)
/// Unknown generator name in a word.
QPROJ_DEFINE_ERROR(UnknownGenerator)
/// A continued-fraction expansion that does not fit the requested form.
QPROJ_DEFINE_ERROR(ShapeMismatch)
/// A series division by a series whose leading coefficient is zero.
QPROJ_DEFINE_ERROR(ZeroLeading)
/// An operation expected an integer-coefficient series.
QPROJ_DEFINE_ERROR(NonIntegerOutput)
/// A digit stream ended before the requested precision was reached.
QPROJ_DEFINE_ERROR(InsufficientDigits)
/// A series is not the expansion of a quantized real number.
QPROJ_DEFINE_ERROR(DecodeFailed)
/// Decoding found more than one admissible continued-fraction digit.
QPROJ_DEFINE_ERROR(AmbiguityDetected)
/// A fence-poset shape outside the supported family.
QPROJ_DEFINE_ERROR(BadShape)
/// A parameter outside the supported range.
QPROJ_DEFINE_ERROR(OutOfRange)
/// Interval refinement did not converge within its budget.
QPROJ_DEFINE_ERROR(PrecisionStall)
/// A checked identity failed.
QPROJ_DEFINE_ERROR(RelationViolated)

#undef QPROJ_DEFINE_ERROR

}  // namespace qproj
