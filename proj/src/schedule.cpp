#include "multicurve/schedule.hpp"

#include <cctype>

#include "multicurve/errors.hpp"

namespace multicurve {

Tenor Tenor::parse(std::string_view text) {
    if (text.size() < 2) throw input_error("bad tenor '" + std::string(text) + "'");
    const char unit = static_cast<char>(std::tolower(static_cast<unsigned char>(text.back())));
    int n = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') throw input_error("bad tenor '" + std::string(text) + "'");
        n = n * 10 + (c - '0');
    }
    if (n <= 0) throw input_error("non-positive tenor '" + std::string(text) + "'");
    switch (unit) {
    case 'd': return days(n);
    case 'w': return days(7 * n);
    case 'm': return months(n);
    case 'y': return months(12 * n);
    default: throw input_error("bad tenor unit in '" + std::string(text) + "'");
    }
}

std::string Tenor::to_string() const {
    return std::to_string(n) + (unit == Unit::DAYS ? "d" : "m");
}

Schedule build_schedule(Date trade, int spot_lag_days, Tenor tenor, Tenor freq, CalendarId cal,
                        RollConvention conv, DayCount dc, StubPolicy stub,
                        const CalendarSet& cals) {
    if (tenor.n <= 0 || freq.n <= 0) throw input_error("build_schedule: non-positive tenor/frequency");
    if (tenor.unit != freq.unit)
        throw input_error("build_schedule: tenor and frequency must share a unit");

    const Date start = cals.add_open_days(trade, spot_lag_days, cal);

    std::vector<int> grid; // offsets from start, in the tenor unit
    const int rem = tenor.n % freq.n;
    if (rem != 0) {
        if (stub != StubPolicy::UPFRONT_SHORT)
            throw input_error("build_schedule: tenor " + tenor.to_string() +
                              " not divisible by frequency " + freq.to_string() +
                              " and no stub policy supplied");
        for (int off = rem; off <= tenor.n; off += freq.n) grid.push_back(off);
    } else {
        for (int off = freq.n; off <= tenor.n; off += freq.n) grid.push_back(off);
    }

    Schedule sched;
    sched.start = start;
    sched.accrual_dc = dc;
    sched.coupon_ends.reserve(grid.size());
    for (int off : grid) {
        const Date unrolled =
            tenor.unit == Tenor::Unit::DAYS ? start + off : add_months(start, off);
        sched.coupon_ends.push_back(cals.roll(unrolled, cal, conv));
    }
    for (std::size_t i = 1; i < sched.coupon_ends.size(); ++i) {
        if (sched.coupon_ends[i] <= sched.coupon_ends[i - 1])
            throw input_error("build_schedule: coupon dates not strictly increasing");
    }
    sched.pay_dates = sched.coupon_ends;
    sched.accruals.reserve(grid.size());
    for (std::size_t i = 0; i < sched.coupon_ends.size(); ++i)
        sched.accruals.push_back(year_fraction(sched.period_start(i), sched.coupon_ends[i], dc));
    return sched;
}

std::vector<Date> monthly_subperiods(Date start, Date end, Date grid_anchor, int months_offset,
                                     CalendarId cal, RollConvention conv, const CalendarSet& cals) {
    std::vector<Date> bounds{start};
    for (int m = months_offset + 1;; ++m) {
        const Date rolled = cals.roll(add_months(grid_anchor, m), cal, conv);
        if (rolled >= end) break;
        if (rolled > bounds.back()) bounds.push_back(rolled);
    }
    bounds.push_back(end);
    return bounds;
}

} // namespace multicurve
