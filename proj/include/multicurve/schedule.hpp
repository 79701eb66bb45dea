#pragma once

#include <string>
#include <vector>

#include "multicurve/calendar.hpp"
#include "multicurve/daycount.hpp"
#include "multicurve/date.hpp"

namespace multicurve {

/// Tenor or coupon period: a whole number of days, weeks, months or years.
/// Day/week tenors step on an exact day grid (TIIE/XCS style); month/year
/// tenors step calendar-monthly, both before rolling.
struct Tenor {
    enum class Unit { DAYS, MONTHS };
    int n = 0;
    Unit unit = Unit::DAYS;

    static Tenor days(int n) { return {n, Unit::DAYS}; }
    static Tenor months(int n) { return {n, Unit::MONTHS}; }
    /// "84d", "2w", "18m", "5y", case-insensitive.
    static Tenor parse(std::string_view text);
    std::string to_string() const;

    /// Rough day count used only for sorting quotes by maturity.
    long approx_days() const { return unit == Unit::DAYS ? n : static_cast<long>(n) * 30 + n / 2; }

    friend bool operator==(const Tenor&, const Tenor&) = default;
};

enum class StubPolicy { NONE, UPFRONT_SHORT };

/// Coupon schedule: rolled coupon end dates, payment dates (equal here) and
/// per-coupon accrual fractions. `start` is the rolled spot date.
struct Schedule {
    Date start;
    std::vector<Date> coupon_ends;
    std::vector<Date> pay_dates;
    std::vector<double> accruals;
    DayCount accrual_dc = DayCount::ACT_360;

    std::size_t size() const { return coupon_ends.size(); }
    Date maturity() const { return coupon_ends.back(); }
    /// Coupon i accrues over [period_start(i), coupon_ends[i]].
    Date period_start(std::size_t i) const { return i == 0 ? start : coupon_ends[i - 1]; }
};

/// Builds the coupon schedule for a trade: spot lag in open days, then an
/// unrolled tenor grid stepped by `freq`, each point rolled independently.
/// A non-divisible tenor needs an explicit stub policy (upfront short).
Schedule build_schedule(Date trade, int spot_lag_days, Tenor tenor, Tenor freq, CalendarId cal,
                        RollConvention conv, DayCount dc, StubPolicy stub = StubPolicy::NONE,
                        const CalendarSet& cals = CalendarSet::bundled());

/// Monthly sub-periods inside [start, end] for compounded coupons: unrolled
/// monthly grid from `grid_anchor`, rolled, final date forced to `end`.
std::vector<Date> monthly_subperiods(Date start, Date end, Date grid_anchor, int months_offset,
                                     CalendarId cal, RollConvention conv,
                                     const CalendarSet& cals = CalendarSet::bundled());

} // namespace multicurve
