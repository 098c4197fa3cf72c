#pragma once

// The scale sequence b_n controlling the Kantorovich cell width b_n/n.
// Admissible sequences are positive, increasing, with b_n -> inf and
// b_n/n -> 0; validity is decided symbolically per family.

#include <cmath>
#include <string>
#include <vector>

#include "jaklev/errors.hpp"

namespace jaklev {

struct ScaleSequence {
  enum class Kind { Power, Log, Constant };

  Kind kind = Kind::Power;
  double param = 0.5;  // theta for Power, c for Constant, unused for Log

  static ScaleSequence power(double theta) { return {Kind::Power, theta}; }
  static ScaleSequence log() { return {Kind::Log, 0.0}; }
  static ScaleSequence constant(double c) { return {Kind::Constant, c}; }

  double operator()(long n) const {
    const double dn = static_cast<double>(n);
    switch (kind) {
      case Kind::Power: return std::pow(dn, param);
      case Kind::Log: return std::log(dn + 1.0);
      case Kind::Constant: return param;
    }
    return 0.0;
  }

  std::string description() const {
    switch (kind) {
      case Kind::Power: return "b_n = n^" + std::to_string(param);
      case Kind::Log: return "b_n = ln(n+1)";
      case Kind::Constant: return "b_n = " + std::to_string(param);
    }
    return {};
  }
};

struct ScaleVerdict {
  bool valid = false;
  std::vector<std::string> reasons;
};

/// Symbolic check of the two limits b_n -> inf and b_n/n -> 0.
inline ScaleVerdict scale_validate(const ScaleSequence& scale) {
  ScaleVerdict verdict;
  switch (scale.kind) {
    case ScaleSequence::Kind::Power: {
      const double theta = scale.param;
      if (theta > 0.0 && theta < 1.0) {
        verdict.valid = true;
      } else if (theta <= 0.0) {
        verdict.reasons.push_back("b_n = n^theta with theta <= 0 fails b_n -> inf");
      } else if (theta == 1.0) {
        verdict.reasons.push_back("b_n/n -> 1 != 0");
      } else {
        verdict.reasons.push_back("b_n/n -> inf for theta > 1");
      }
      break;
    }
    case ScaleSequence::Kind::Log:
      verdict.valid = true;  // ln(n+1) -> inf, ln(n+1)/n -> 0
      break;
    case ScaleSequence::Kind::Constant:
      verdict.reasons.push_back("constant sequence fails b_n -> inf");
      if (!(scale.param > 0.0)) verdict.reasons.push_back("b_n must be positive");
      break;
  }
  return verdict;
}

}  // namespace jaklev
