#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asymbeta {

// Calendar month as a flat index: year * 12 + (month - 1). Arithmetic on
// month indices is plain integer arithmetic, which keeps window scheduling
// free of date-library corner cases.
using MonthIndex = int;

MonthIndex month_from_string(std::string_view ym);  // "YYYY-MM"
std::string month_to_string(MonthIndex m);

// Trading dates are packed as yyyymmdd; the packing preserves ordering.
using DateKey = int;

DateKey date_from_string(std::string_view ymd);  // "YYYY-MM-DD", throws on junk
bool try_parse_date(std::string_view ymd, DateKey* out);
std::string date_to_string(DateKey d);
MonthIndex month_of_date(DateKey d);

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) { return std::isnan(v); }

// Fatal data/contract violations. Loaders and preprocessors throw this with
// a message that names the offending file, row, column or month.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-fatal diagnostics go to stderr so emitted artifacts stay byte-stable.
void warn(const std::string& msg);

// Round-trip-exact double formatting used by every file writer.
std::string format_double(double v);  // "NA" for NaN

}  // namespace asymbeta
