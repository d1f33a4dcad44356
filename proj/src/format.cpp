#include "aniso/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace aniso {

std::string shortest(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string printf_double(const char* fmt, double x) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), fmt, x);
  return buf.data();
}

std::string table_style(double x) {
  const double a = std::abs(x);
  // Values that would round up to 10.00000 switch to exponent form.
  if (a >= 1.0 && a < 9.999995) return printf_double("%.5f", x);
  return printf_double("%.5e", x);
}

std::string sig5(double x) { return printf_double("%.4e", x); }

}  // namespace aniso
