#pragma once

#include <charconv>
#include <string>

namespace isoconv {

/// Shortest decimal string that reads back to the same double.
inline std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace isoconv
