#pragma once

#include <stdexcept>
#include <string>

namespace jaklev {

/// Base class for all library errors.
class Error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// g(1) = 0: the operator normalization 1/g(1) is undefined.
class ZeroG1Error : public Error {
  using Error::Error;
};

/// Some a_k/g(1) < 0: the kernel is not a probability mixture.
class NotPositiveError : public Error {
  using Error::Error;
};

class InvalidEpsilonError : public Error {
  using Error::Error;
};

/// Scale sequence fails b_n -> inf or b_n/n -> 0 and no override was given.
class InvalidScaleError : public Error {
  using Error::Error;
};

/// The exponential-type majorant of f overflows at the truncation boundary.
class GrowthOverflowError : public Error {
  using Error::Error;
};

/// f returned NaN/Inf inside an integration cell.
class NonFiniteSampleError : public Error {
  using Error::Error;
};

/// Modulus grid step exceeds delta/10.
class GridTooCoarseError : public Error {
  using Error::Error;
};

/// Derivative sup norms are not available in closed form for this preset.
class DerivativesUnknownError : public Error {
  using Error::Error;
};

/// Bounded sup norm required but the preset is unbounded on [0, inf).
class UnboundedFunctionError : public Error {
  using Error::Error;
};

/// Lipschitz-class membership estimate exceeds the declared constant.
class NotInLipClassError : public Error {
  using Error::Error;
};

class XNonPositiveError : public Error {
  using Error::Error;
};

/// Growth exceeds rho(x) = 1 + x^2: no analytic tail bound exists.
class TailUnboundedError : public Error {
  using Error::Error;
};

/// Preset is not in C_rho^k (no finite limit of f/rho, or not C^2).
class NotInCRhoKError : public Error {
  using Error::Error;
};

/// Experiment config failed validation; message carries the offending entry.
class ConfigError : public Error {
  using Error::Error;
};

}  // namespace jaklev
