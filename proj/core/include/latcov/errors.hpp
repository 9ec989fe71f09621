#pragma once

#include <stdexcept>
#include <string>

namespace latcov {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / argument problems.
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidBody : Error { using Error::Error; };
struct NonUnimodular : Error { using Error::Error; };
struct UnsupportedFamily : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct MinimaNotComputed : Error { using Error::Error; };
struct InvalidNu : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };

// Resource limits.
struct EnumerationBudgetExceeded : Error { using Error::Error; };
struct InstanceTooLarge : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };

// Outcomes that signal a failed search or a failed verification.
struct NoLiftFound : Error { using Error::Error; };
struct NoAdmissiblePrime : Error { using Error::Error; };
struct CoverageVerificationFailed : Error { using Error::Error; };

// A proven invariant failed at runtime; always a bug worth a loud report.
struct InternalCheckFailed : Error { using Error::Error; };

}  // namespace latcov
