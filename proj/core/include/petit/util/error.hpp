#pragma once

#include <stdexcept>
#include <string>

namespace petit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define PETIT_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

// Configuration and input validation.
PETIT_DEFINE_ERROR(ConfigError);
PETIT_DEFINE_ERROR(AxiomViolation);
PETIT_DEFINE_ERROR(BadAutomorphism);
PETIT_DEFINE_ERROR(InvalidArgument);

// Arithmetic.
PETIT_DEFINE_ERROR(ZeroInverse);
PETIT_DEFINE_ERROR(ShapeMismatch);
PETIT_DEFINE_ERROR(NonInvertibleLeadingCoefficient);
PETIT_DEFINE_ERROR(NonMonicModulus);
PETIT_DEFINE_ERROR(UnsupportedCoefficientRing);
PETIT_DEFINE_ERROR(NotAFiniteField);

// Quotients and orders.
PETIT_DEFINE_ERROR(ZeroIdeal);
PETIT_DEFINE_ERROR(NotWellDefined);
PETIT_DEFINE_ERROR(CoefficientsNotIntegral);
PETIT_DEFINE_ERROR(SpecMismatch);

// Coding.
PETIT_DEFINE_ERROR(ZeroElement);
PETIT_DEFINE_ERROR(NotInOuterCode);
PETIT_DEFINE_ERROR(EmptyCode);
PETIT_DEFINE_ERROR(EmbeddingMissing);
PETIT_DEFINE_ERROR(NotAField);

/// Raised when an exhaustive search would exceed its configured budget.
PETIT_DEFINE_ERROR(BudgetExceeded);

#undef PETIT_DEFINE_ERROR

}  // namespace petit
