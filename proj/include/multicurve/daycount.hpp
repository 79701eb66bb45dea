#pragma once

#include <string>
#include <string_view>

#include "multicurve/date.hpp"

namespace multicurve {

enum class DayCount { ACT_360, ACT_365, ACT_ACT_ISDA, THIRTY_360 };

DayCount daycount_from_string(std::string_view name);
std::string to_string(DayCount dc);

/// Year fraction between d1 <= d2 under the given convention.
/// THIRTY_360 uses the US/ISDA day adjustment (D1 31->30; D2 31->30 when D1 >= 30).
/// ACT_ACT_ISDA splits the interval into leap-year days / 366 and other days / 365.
double year_fraction(Date d1, Date d2, DayCount dc);

} // namespace multicurve
