#include "multicurve/daycount.hpp"

#include "multicurve/errors.hpp"

namespace multicurve {

DayCount daycount_from_string(std::string_view name) {
    if (name == "ACT_360" || name == "ACT/360") return DayCount::ACT_360;
    if (name == "ACT_365" || name == "ACT/365") return DayCount::ACT_365;
    if (name == "ACT_ACT_ISDA" || name == "ACT/ACT") return DayCount::ACT_ACT_ISDA;
    if (name == "THIRTY_360" || name == "30/360") return DayCount::THIRTY_360;
    throw input_error("unknown day count '" + std::string(name) + "'");
}

std::string to_string(DayCount dc) {
    switch (dc) {
    case DayCount::ACT_360: return "ACT_360";
    case DayCount::ACT_365: return "ACT_365";
    case DayCount::ACT_ACT_ISDA: return "ACT_ACT_ISDA";
    case DayCount::THIRTY_360: return "THIRTY_360";
    }
    return "?";
}

double year_fraction(Date d1, Date d2, DayCount dc) {
    if (d1 > d2) throw domain_error("year_fraction: d1 > d2 (" + d1.to_iso() + " > " + d2.to_iso() + ")");
    switch (dc) {
    case DayCount::ACT_360:
        return static_cast<double>(d2 - d1) / 360.0;
    case DayCount::ACT_365:
        return static_cast<double>(d2 - d1) / 365.0;
    case DayCount::ACT_ACT_ISDA: {
        double frac = 0.0;
        Date cursor = d1;
        while (cursor < d2) {
            const int y = cursor.year();
            const Date next_jan1 = Date::from_ymd(y + 1, 1, 1);
            const Date stop = next_jan1 < d2 ? next_jan1 : d2;
            frac += static_cast<double>(stop - cursor) / (is_leap_year(y) ? 366.0 : 365.0);
            cursor = stop;
        }
        return frac;
    }
    case DayCount::THIRTY_360: {
        int day1 = d1.day();
        int day2 = d2.day();
        if (day1 == 31) day1 = 30;
        if (day2 == 31 && day1 >= 30) day2 = 30;
        const int days = 360 * (d2.year() - d1.year()) + 30 * (d2.month() - d1.month()) +
                         (day2 - day1);
        return static_cast<double>(days) / 360.0;
    }
    }
    throw domain_error("year_fraction: bad day count");
}

} // namespace multicurve
