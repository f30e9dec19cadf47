#pragma once

#include <stdexcept>

namespace bicirc {

// Base class for all domain errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph-core
class NonSymmetricConnectionSet final : public Error { public: using Error::Error; };
class ZeroInRT final : public Error { public: using Error::Error; };
class DuplicateElement final : public Error { public: using Error::Error; };
class OutOfRange final : public Error { public: using Error::Error; };

// exact-linear
class NotSquare final : public Error { public: using Error::Error; };

// laurent
class NotPalindromic final : public Error { public: using Error::Error; };
class ZeroPolynomial final : public Error { public: using Error::Error; };
class OddOrderForHalfClass final : public Error { public: using Error::Error; };
class NonDivisible final : public Error { public: using Error::Error; };

// numeric
class PrecisionExhausted final : public Error { public: using Error::Error; };
class RootOnUnitCircle final : public Error { public: using Error::Error; };
class ToleranceNotMet final : public Error { public: using Error::Error; };

// arithmetic
class NonPositive final : public Error { public: using Error::Error; };
class NegativeConstant final : public Error { public: using Error::Error; };
class NotDivisible final : public Error { public: using Error::Error; };
class NotAPerfectSquare final : public Error { public: using Error::Error; };

}  // namespace bicirc
