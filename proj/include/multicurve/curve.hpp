#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "multicurve/daycount.hpp"
#include "multicurve/date.hpp"
#include "multicurve/interpolation.hpp"
#include "multicurve/schedule.hpp"

namespace multicurve {

/// Knot-based zero-rate term structure. Zero rates are continuously
/// compounded over year fractions from the valuation date under `time_dc`,
/// so df(T) = exp(-tau(t,T) * R(t,T)) and df at the valuation date is 1.
///
/// Calibration code owns a curve privately and moves knot values through
/// set_zero (which refits the interpolant immediately); once published the
/// object is read-only and safe to share across threads.
class Curve {
public:
    Curve() = default;
    Curve(Date valuation, std::vector<Date> pillar_dates, std::vector<double> zeros,
          InterpMethod method, DayCount time_dc, std::string label);

    Date valuation_date() const { return valuation_; }
    const std::vector<Date>& pillar_dates() const { return dates_; }
    const std::vector<double>& pillar_times() const { return times_; }
    const std::vector<double>& zeros() const { return zeros_; }
    InterpMethod method() const { return method_; }
    DayCount time_dc() const { return time_dc_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return dates_.size(); }

    double time_of(Date d) const;
    double zero_rate(Date d) const { return zero_at_time(time_of(d)); }
    double zero_at_time(double t) const;
    double df(Date d) const;
    double df_at_time(double t) const;
    /// Forward discount factor df(T)/df(S) for valuation <= S <= T.
    double forward_df(Date s, Date t) const;
    /// One-calendar-day forward rate ln(df(T)/df(T+1d)).
    double daily_forward(Date d) const;

    void set_zero(std::size_t pillar, double zero);
    void set_label(std::string label) { label_ = std::move(label); }

private:
    void refit();

    Date valuation_;
    std::vector<Date> dates_;
    std::vector<double> times_;
    std::vector<double> zeros_;
    InterpMethod method_ = InterpMethod::NATURAL_CUBIC_ON_YIELD;
    DayCount time_dc_ = DayCount::ACT_360;
    std::string label_;
    Interpolant interp_;
};

/// Projection view over a pseudo-discount curve: simple forwards of an index.
struct ForwardCurveView {
    const Curve* curve = nullptr;
    Tenor index_tenor{28, Tenor::Unit::DAYS};
    DayCount fixing_dc = DayCount::ACT_360;

    /// (df(S)/df(T) - 1) / tau(S,T) with tau under fixing_dc; needs S < T.
    double simple_forward(Date s, Date t) const;
    double simple_forward_times(double ts, double tt, double accrual) const;
};

/// Blended discount factor for a partially collateralized trade under
/// deterministic rates: df_coll^alpha * df_fund^(1-alpha).
double alpha_collateral_df(const Curve& coll, const Curve& fund, double alpha, Date t);

/// CSV export, columns pillar_date, zero_rate, discount_factor, with the
/// label/valuation/method/time_dc in comment lines. `read_curve_csv` accepts
/// the same format back (the discount-factor column is ignored).
void write_curve_csv(const Curve& curve, std::ostream& os);
void write_curve_csv(const Curve& curve, const std::string& path);
Curve read_curve_csv(std::istream& is, const std::string& origin = "<stream>");
Curve read_curve_csv_file(const std::string& path);

/// Daily-forward export, columns date, forward_rate, from valuation to the
/// last pillar.
void write_daily_forward_csv(const Curve& curve, std::ostream& os);
void write_daily_forward_csv(const Curve& curve, const std::string& path);

} // namespace multicurve
