#include "multicurve/calendar.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "multicurve/errors.hpp"

namespace multicurve {
namespace {

constexpr int kFirstYear = 2014;
constexpr int kLastYear = 2046;

Date nth_weekday_of_month(int year, int month, int weekday, int nth) {
    Date first = Date::from_ymd(year, month, 1);
    int shift = (weekday - first.weekday() + 7) % 7;
    return first + (shift + 7 * (nth - 1));
}

Date last_weekday_of_month(int year, int month, int weekday) {
    Date last = Date::from_ymd(year, month, days_in_month(year, month));
    int shift = (last.weekday() - weekday + 7) % 7;
    return last - shift;
}

// US fixed-date holidays observe the nearest weekday: Sat -> Fri, Sun -> Mon.
Date us_observed(Date d) {
    if (d.weekday() == 5) return d - 1;
    if (d.weekday() == 6) return d + 1;
    return d;
}

// UK bank holidays falling on a weekend move to the next open weekday.
Date uk_substitute(Date d, const std::vector<Date>& taken) {
    while (d.is_weekend() || std::find(taken.begin(), taken.end(), d) != taken.end()) d = d + 1;
    return d;
}

} // namespace

Date easter_sunday(int year) {
    const int a = year % 19;
    const int b = year / 100;
    const int c = year % 100;
    const int d = b / 4;
    const int e = b % 4;
    const int f = (b + 8) / 25;
    const int g = (b - f + 1) / 3;
    const int h = (19 * a + b - d - g + 15) % 30;
    const int i = c / 4;
    const int k = c % 4;
    const int l = (32 + 2 * e + 2 * i - h - k) % 7;
    const int m = (a + 11 * h + 22 * l) / 451;
    const int month = (h + l - 7 * m + 114) / 31;
    const int day = ((h + l - 7 * m + 114) % 31) + 1;
    return Date::from_ymd(year, month, day);
}

std::vector<Date> generate_holidays(CalendarId id, int first_year, int last_year) {
    std::vector<Date> out;
    for (int y = first_year; y <= last_year; ++y) {
        const Date easter = easter_sunday(y);
        switch (id) {
        case CalendarId::MX:
            out.push_back(Date::from_ymd(y, 1, 1));           // New Year's Day
            out.push_back(nth_weekday_of_month(y, 2, 0, 1));  // Constitution Day
            out.push_back(nth_weekday_of_month(y, 3, 0, 3));  // Benito Juarez's birthday
            out.push_back(easter - 3);                        // Maundy Thursday
            out.push_back(easter - 2);                        // Good Friday
            out.push_back(Date::from_ymd(y, 5, 1));           // Worker's Day
            out.push_back(Date::from_ymd(y, 9, 16));          // Independence Day
            out.push_back(Date::from_ymd(y, 11, 2));          // Day of the Dead
            out.push_back(nth_weekday_of_month(y, 11, 0, 3)); // Revolution Day
            out.push_back(Date::from_ymd(y, 12, 12));         // Bank employees' holiday
            out.push_back(Date::from_ymd(y, 12, 25));         // Christmas Day
            break;
        case CalendarId::US:
            out.push_back(us_observed(Date::from_ymd(y, 1, 1)));   // New Year's Day
            out.push_back(nth_weekday_of_month(y, 1, 0, 3));       // Martin Luther King Jr. Day
            out.push_back(nth_weekday_of_month(y, 2, 0, 3));       // Washington's Birthday
            out.push_back(easter - 2);                             // Good Friday
            out.push_back(last_weekday_of_month(y, 5, 0));         // Memorial Day
            out.push_back(us_observed(Date::from_ymd(y, 7, 4)));   // Independence Day
            out.push_back(nth_weekday_of_month(y, 9, 0, 1));       // Labor Day
            out.push_back(nth_weekday_of_month(y, 10, 0, 2));      // Columbus Day
            out.push_back(us_observed(Date::from_ymd(y, 11, 11))); // Veterans Day
            out.push_back(us_observed(Date::from_ymd(y, 12, 25))); // Christmas Day
            break;
        case CalendarId::UK: {
            std::vector<Date> year_dates;
            year_dates.push_back(uk_substitute(Date::from_ymd(y, 1, 1), year_dates));
            year_dates.push_back(easter - 2);                       // Good Friday
            year_dates.push_back(easter + 1);                       // Easter Monday
            year_dates.push_back(nth_weekday_of_month(y, 5, 0, 1)); // May Bank Holiday
            year_dates.push_back(last_weekday_of_month(y, 5, 0));   // Spring Bank Holiday
            year_dates.push_back(last_weekday_of_month(y, 8, 0));   // Summer Bank Holiday
            const Date christmas = uk_substitute(Date::from_ymd(y, 12, 25), year_dates);
            year_dates.push_back(christmas);
            year_dates.push_back(uk_substitute(Date::from_ymd(y, 12, 26), year_dates));
            out.insert(out.end(), year_dates.begin(), year_dates.end());
            break;
        }
        case CalendarId::TARGET:
            out.push_back(Date::from_ymd(y, 1, 1));  // New Year's Day
            out.push_back(easter - 2);               // Good Friday
            out.push_back(easter + 1);               // Easter Monday
            out.push_back(Date::from_ymd(y, 5, 1));  // Labour Day
            out.push_back(Date::from_ymd(y, 12, 25)); // Christmas Day
            out.push_back(Date::from_ymd(y, 12, 26)); // Boxing Day
            break;
        default:
            throw domain_error("generate_holidays: " + to_string(id) + " is a joint calendar");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Calendar::Calendar(std::vector<Date> holidays) {
    std::sort(holidays.begin(), holidays.end());
    holidays.erase(std::unique(holidays.begin(), holidays.end()), holidays.end());
    sorted_holidays_ = holidays;
    for (Date d : holidays) holidays_.insert(d.serial());
}

bool Calendar::is_business_day(Date d) const { return !d.is_weekend() && !is_holiday(d); }

CalendarId calendar_from_string(std::string_view name) {
    if (name == "MX") return CalendarId::MX;
    if (name == "US") return CalendarId::US;
    if (name == "UK") return CalendarId::UK;
    if (name == "TARGET") return CalendarId::TARGET;
    if (name == "US_UK") return CalendarId::US_UK;
    if (name == "US_MX") return CalendarId::US_MX;
    if (name == "US_UK_MX") return CalendarId::US_UK_MX;
    throw input_error("unknown calendar '" + std::string(name) + "'");
}

std::string to_string(CalendarId id) {
    switch (id) {
    case CalendarId::MX: return "MX";
    case CalendarId::US: return "US";
    case CalendarId::UK: return "UK";
    case CalendarId::TARGET: return "TARGET";
    case CalendarId::US_UK: return "US_UK";
    case CalendarId::US_MX: return "US_MX";
    case CalendarId::US_UK_MX: return "US_UK_MX";
    }
    return "?";
}

RollConvention roll_from_string(std::string_view name) {
    if (name == "FOLLOWING") return RollConvention::FOLLOWING;
    if (name == "MODIFIED_FOLLOWING") return RollConvention::MODIFIED_FOLLOWING;
    throw input_error("unknown roll convention '" + std::string(name) + "'");
}

std::string to_string(RollConvention conv) {
    return conv == RollConvention::FOLLOWING ? "FOLLOWING" : "MODIFIED_FOLLOWING";
}

CalendarSet CalendarSet::generated() {
    CalendarSet set;
    set.mx_ = Calendar{generate_holidays(CalendarId::MX, kFirstYear, kLastYear)};
    set.us_ = Calendar{generate_holidays(CalendarId::US, kFirstYear, kLastYear)};
    set.uk_ = Calendar{generate_holidays(CalendarId::UK, kFirstYear, kLastYear)};
    set.target_ = Calendar{generate_holidays(CalendarId::TARGET, kFirstYear, kLastYear)};
    return set;
}

const CalendarSet& CalendarSet::bundled() {
    static const CalendarSet set = [] {
        CalendarSet s = generated();
        if (const char* dir = std::getenv("MULTICURVE_DATA_DIR")) {
            for (CalendarId id :
                 {CalendarId::MX, CalendarId::US, CalendarId::UK, CalendarId::TARGET}) {
                std::string path = std::string(dir) + "/calendars/";
                std::string name = to_string(id);
                std::transform(name.begin(), name.end(), name.begin(),
                               [](unsigned char c) { return std::tolower(c); });
                path += name + ".txt";
                if (std::ifstream probe{path}; probe.good()) s.load_holiday_file(id, path);
            }
        }
        return s;
    }();
    return set;
}

void CalendarSet::load_holiday_file(CalendarId id, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open holiday file '" + path + "'");
    std::vector<Date> dates;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            dates.push_back(Date::parse_iso(line));
        } catch (const std::exception&) {
            throw parse_error("bad holiday date '" + line + "' in " + path, lineno);
        }
    }
    Calendar cal{std::move(dates)};
    switch (id) {
    case CalendarId::MX: mx_ = std::move(cal); break;
    case CalendarId::US: us_ = std::move(cal); break;
    case CalendarId::UK: uk_ = std::move(cal); break;
    case CalendarId::TARGET: target_ = std::move(cal); break;
    default: throw domain_error("holiday files apply to base calendars only");
    }
}

const Calendar& CalendarSet::base(CalendarId id) const {
    switch (id) {
    case CalendarId::MX: return mx_;
    case CalendarId::US: return us_;
    case CalendarId::UK: return uk_;
    case CalendarId::TARGET: return target_;
    default: throw domain_error(to_string(id) + " is a joint calendar");
    }
}

bool CalendarSet::is_business_day(Date d, CalendarId id) const {
    switch (id) {
    case CalendarId::MX: return mx_.is_business_day(d);
    case CalendarId::US: return us_.is_business_day(d);
    case CalendarId::UK: return uk_.is_business_day(d);
    case CalendarId::TARGET: return target_.is_business_day(d);
    case CalendarId::US_UK: return us_.is_business_day(d) && uk_.is_business_day(d);
    case CalendarId::US_MX: return us_.is_business_day(d) && mx_.is_business_day(d);
    case CalendarId::US_UK_MX:
        return us_.is_business_day(d) && uk_.is_business_day(d) && mx_.is_business_day(d);
    }
    return false;
}

Date CalendarSet::roll(Date d, CalendarId id, RollConvention conv) const {
    Date rolled = d;
    while (!is_business_day(rolled, id)) rolled = rolled + 1;
    if (conv == RollConvention::MODIFIED_FOLLOWING && rolled.month() != d.month()) {
        rolled = d;
        while (!is_business_day(rolled, id)) rolled = rolled - 1;
    }
    return rolled;
}

Date CalendarSet::add_open_days(Date d, int n, CalendarId id) const {
    if (n < 0) throw domain_error("add_open_days: negative count");
    if (n == 0) return roll(d, id, RollConvention::FOLLOWING);
    Date out = d;
    for (int i = 0; i < n; ++i) {
        out = out + 1;
        while (!is_business_day(out, id)) out = out + 1;
    }
    return out;
}

} // namespace multicurve
