#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "multicurve/date.hpp"

namespace multicurve {

/// Business-day calendars used by the instruments. Joint calendars treat a
/// date as a business day iff it is one in every member calendar.
enum class CalendarId { MX, US, UK, TARGET, US_UK, US_MX, US_UK_MX };

enum class RollConvention { FOLLOWING, MODIFIED_FOLLOWING };

CalendarId calendar_from_string(std::string_view name);
std::string to_string(CalendarId id);
RollConvention roll_from_string(std::string_view name);
std::string to_string(RollConvention conv);

/// Holiday set for one region plus the Saturday/Sunday weekend rule.
class Calendar {
public:
    Calendar() = default;
    explicit Calendar(std::vector<Date> holidays);

    bool is_business_day(Date d) const;
    bool is_holiday(Date d) const { return holidays_.count(d.serial()) != 0; }
    const std::vector<Date>& holidays() const { return sorted_holidays_; }

private:
    std::unordered_set<std::int64_t> holidays_;
    std::vector<Date> sorted_holidays_;
};

/// Access to the bundled calendars. Holiday lists are generated for
/// 2014-2046 (fixed-date rules plus Easter-derived dates via the computus)
/// and can be overridden by plain-text files, one ISO date per line, found as
/// <dir>/<id>.txt under MULTICURVE_DATA_DIR/calendars or an explicit path.
class CalendarSet {
public:
    /// Built-in generated calendars, honoring MULTICURVE_DATA_DIR overrides.
    static const CalendarSet& bundled();

    /// Built-in generated calendars only, ignoring any environment override.
    static CalendarSet generated();

    bool is_business_day(Date d, CalendarId id) const;
    Date roll(Date d, CalendarId id, RollConvention conv) const;
    /// n-th business day strictly after d (n >= 1); n = 0 rolls d forward if needed.
    Date add_open_days(Date d, int n, CalendarId id) const;

    const Calendar& base(CalendarId id) const; // MX, US, UK or TARGET only

    void load_holiday_file(CalendarId id, const std::string& path);

private:
    Calendar mx_, us_, uk_, target_;
};

/// First-year..last-year holiday generation for one base region.
std::vector<Date> generate_holidays(CalendarId id, int first_year, int last_year);

/// Gregorian Easter Sunday (anonymous computus).
Date easter_sunday(int year);

} // namespace multicurve
