#pragma once

// Number formatting for CSV and tables. Locale independent.

#include <string>

namespace aniso {

/// Shortest decimal that round-trips to the same double.
std::string shortest(double x);
/// Table style: values in [1, 10) as %.5f, everything else as %.5e.
std::string table_style(double x);
/// Five significant digits, %.4e.
std::string sig5(double x);
/// printf-style with a single double argument.
std::string printf_double(const char* fmt, double x);

}  // namespace aniso
