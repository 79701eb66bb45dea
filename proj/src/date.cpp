#include "multicurve/date.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "multicurve/errors.hpp"

namespace multicurve {
namespace {

// Howard Hinnant's civil/serial conversions (public-domain algorithms).
constexpr std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365u + yoe / 4u - yoe / 100u + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct Civil {
    int y;
    int m;
    int d;
};

constexpr Civil civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : static_cast<unsigned>(-9));
    return {static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

} // namespace

bool is_leap_year(int year) {
    return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
    static constexpr std::array<int, 12> lengths{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2 && is_leap_year(year)) return 29;
    return lengths[static_cast<std::size_t>(month - 1)];
}

Date Date::from_ymd(int year, int month, int day) {
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month))
        throw domain_error("invalid calendar date " + std::to_string(year) + "-" +
                           std::to_string(month) + "-" + std::to_string(day));
    return Date{days_from_civil(year, month, day)};
}

Date Date::parse_iso(std::string_view iso) {
    auto fail = [&] { throw parse_error("invalid ISO date '" + std::string(iso) + "'", 0); };
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') fail();
    int y = 0, m = 0, d = 0;
    auto num = [&](std::size_t pos, std::size_t len, int& out) {
        auto res = std::from_chars(iso.data() + pos, iso.data() + pos + len, out);
        if (res.ec != std::errc{} || res.ptr != iso.data() + pos + len) fail();
    };
    num(0, 4, y);
    num(5, 2, m);
    num(8, 2, d);
    return from_ymd(y, m, d);
}

int Date::year() const { return civil_from_days(serial_).y; }
int Date::month() const { return civil_from_days(serial_).m; }
int Date::day() const { return civil_from_days(serial_).d; }

int Date::weekday() const {
    // 1970-01-01 was a Thursday (index 3).
    const std::int64_t w = (serial_ % 7 + 7 + 3) % 7;
    return static_cast<int>(w);
}

std::string Date::to_iso() const {
    const Civil c = civil_from_days(serial_);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", c.y, c.m, c.d);
    return buf;
}

Date add_months(Date d, int months) {
    const Civil c = civil_from_days(d.serial());
    int m0 = c.y * 12 + (c.m - 1) + months;
    const int y = (m0 >= 0 ? m0 : m0 - 11) / 12;
    const int m = m0 - y * 12 + 1;
    const int day = std::min(c.d, days_in_month(y, m));
    return Date::from_ymd(y, m, day);
}

} // namespace multicurve
