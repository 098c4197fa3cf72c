#pragma once

// Deterministic number formatting shared by CSV reports and labels:
// shortest round-trip decimal form (never more than 17 significant digits),
// identical across runs and thread counts.

#include <charconv>
#include <cstdint>
#include <string>
#include <system_error>

namespace jaklev {

inline std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string fmt_long(long long v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace jaklev
