#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace multicurve {

/// Calendar date as a proleptic-Gregorian serial number (days since 1970-01-01).
/// Plain value type; all tenor arithmetic happens in integer days or months.
class Date {
public:
    Date() = default;
    explicit constexpr Date(std::int64_t serial) : serial_(serial) {}
    static Date from_ymd(int year, int month, int day);
    static Date parse_iso(std::string_view iso); // "YYYY-MM-DD"

    int year() const;
    int month() const;
    int day() const;
    /// 0 = Monday ... 6 = Sunday.
    int weekday() const;
    bool is_weekend() const { return weekday() >= 5; }

    std::string to_iso() const;
    constexpr std::int64_t serial() const { return serial_; }

    friend constexpr auto operator<=>(const Date&, const Date&) = default;
    friend constexpr Date operator+(Date d, std::int64_t days) { return Date{d.serial_ + days}; }
    friend constexpr Date operator-(Date d, std::int64_t days) { return Date{d.serial_ - days}; }
    friend constexpr std::int64_t operator-(Date a, Date b) { return a.serial_ - b.serial_; }

private:
    std::int64_t serial_ = 0;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);

/// Calendar-month shift with end-of-month clamping (Jan 31 + 1m = Feb 28/29).
Date add_months(Date d, int months);

} // namespace multicurve
