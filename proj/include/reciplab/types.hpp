#pragma once

#include <stdexcept>
#include <string>

#include <mpfr.h>

namespace reciplab {

/// Working precision in bits of the binary mantissa.
using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 256;
inline constexpr Precision kMinPrecision = 53;

/// The two families of periodic functions: I is the cotangent family,
/// II the cosecant family.
enum class Kind { I, II };

inline const char* to_string(Kind k) { return k == Kind::I ? "I" : "II"; }

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Evaluation point too close to a real-axis pole; caller should resample.
struct PoleProximityError : Error {
  using Error::Error;
};

struct IntegerArgumentError : Error {
  using Error::Error;
};

struct NotMultiplicityFreeError : Error {
  using Error::Error;
};

struct NotCoprimeError : Error {
  using Error::Error;
};

struct InadmissibleTripleError : Error {
  using Error::Error;
};

struct ParityMismatchError : Error {
  using Error::Error;
};

struct NoConvergenceError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace reciplab
