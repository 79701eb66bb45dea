#include "multicurve/curve.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "multicurve/errors.hpp"

namespace multicurve {

Curve::Curve(Date valuation, std::vector<Date> pillar_dates, std::vector<double> zeros,
             InterpMethod method, DayCount time_dc, std::string label)
    : valuation_(valuation),
      dates_(std::move(pillar_dates)),
      zeros_(std::move(zeros)),
      method_(method),
      time_dc_(time_dc),
      label_(std::move(label)) {
    if (dates_.empty() || dates_.size() != zeros_.size())
        throw input_error("Curve '" + label_ + "': pillar/zero size mismatch");
    times_.reserve(dates_.size());
    Date prev = valuation_;
    for (Date d : dates_) {
        if (d < prev)
            throw input_error("Curve '" + label_ +
                              "': pillars must be increasing and >= valuation date");
        prev = d + 1;
        times_.push_back(year_fraction(valuation_, d, time_dc_));
    }
    refit();
}

void Curve::refit() { interp_ = Interpolant(method_, times_, zeros_); }

void Curve::set_zero(std::size_t pillar, double zero) {
    zeros_.at(pillar) = zero;
    refit();
}

double Curve::time_of(Date d) const {
    if (d < valuation_)
        throw domain_error("Curve '" + label_ + "': date " + d.to_iso() +
                           " precedes valuation date " + valuation_.to_iso());
    return year_fraction(valuation_, d, time_dc_);
}

double Curve::zero_at_time(double t) const { return interp_(t); }

double Curve::df_at_time(double t) const { return std::exp(-zero_at_time(t) * t); }

double Curve::df(Date d) const { return df_at_time(time_of(d)); }

double Curve::forward_df(Date s, Date t) const {
    if (s > t) throw domain_error("forward_df: S > T");
    return df(t) / df(s);
}

double Curve::daily_forward(Date d) const { return std::log(df(d) / df(d + 1)); }

double ForwardCurveView::simple_forward(Date s, Date t) const {
    if (!curve) throw domain_error("ForwardCurveView: no underlying curve");
    if (s >= t) throw domain_error("simple_forward: S >= T");
    const double tau = year_fraction(s, t, fixing_dc);
    return (curve->df(s) / curve->df(t) - 1.0) / tau;
}

double ForwardCurveView::simple_forward_times(double ts, double tt, double accrual) const {
    return (curve->df_at_time(ts) / curve->df_at_time(tt) - 1.0) / accrual;
}

double alpha_collateral_df(const Curve& coll, const Curve& fund, double alpha, Date t) {
    if (alpha < 0.0 || alpha > 1.0)
        throw domain_error("alpha_collateral_df: alpha outside [0,1]");
    return std::pow(coll.df(t), alpha) * std::pow(fund.df(t), 1.0 - alpha);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

void write_curve_csv(const Curve& curve, std::ostream& os) {
    os << "# label " << curve.label() << "\n";
    os << "# valuation " << curve.valuation_date().to_iso() << "\n";
    os << "# method " << to_string(curve.method()) << "\n";
    os << "# time_dc " << to_string(curve.time_dc()) << "\n";
    os << "pillar_date,zero_rate,discount_factor\n";
    for (std::size_t i = 0; i < curve.size(); ++i) {
        os << curve.pillar_dates()[i].to_iso() << "," << fmt(curve.zeros()[i]) << ","
           << fmt(curve.df(curve.pillar_dates()[i])) << "\n";
    }
}

void write_curve_csv(const Curve& curve, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw input_error("cannot write curve file '" + path + "'");
    write_curve_csv(curve, os);
}

Curve read_curve_csv(std::istream& is, const std::string& origin) {
    std::string label = "curve";
    Date valuation;
    bool have_valuation = false;
    InterpMethod method = InterpMethod::NATURAL_CUBIC_ON_YIELD;
    DayCount time_dc = DayCount::ACT_360;
    std::vector<Date> dates;
    std::vector<double> zeros;

    std::string line;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hdr(line.substr(1));
            std::string key, value;
            hdr >> key >> value;
            if (key == "label") label = value;
            else if (key == "valuation") {
                valuation = Date::parse_iso(value);
                have_valuation = true;
            } else if (key == "method") method = interp_from_string(value);
            else if (key == "time_dc") time_dc = daycount_from_string(value);
            continue;
        }
        if (line.rfind("pillar_date", 0) == 0) continue;
        std::istringstream row(line);
        std::string date_s, zero_s;
        if (!std::getline(row, date_s, ',') || !std::getline(row, zero_s, ','))
            throw parse_error(origin + ": malformed curve row '" + line + "'", lineno);
        try {
            dates.push_back(Date::parse_iso(date_s));
            zeros.push_back(std::stod(zero_s));
        } catch (const std::exception&) {
            throw parse_error(origin + ": malformed curve row '" + line + "'", lineno);
        }
    }
    if (!have_valuation) throw parse_error(origin + ": missing '# valuation' header", 0);
    if (dates.empty()) throw parse_error(origin + ": no pillars", 0);
    return Curve{valuation, std::move(dates), std::move(zeros), method, time_dc, label};
}

Curve read_curve_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw input_error("cannot open curve file '" + path + "'");
    return read_curve_csv(is, path);
}

void write_daily_forward_csv(const Curve& curve, std::ostream& os) {
    os << "# label " << curve.label() << "\n";
    os << "date,forward_rate\n";
    const Date last = curve.pillar_dates().back();
    for (Date d = curve.valuation_date(); d < last; d = d + 1)
        os << d.to_iso() << "," << fmt(curve.daily_forward(d)) << "\n";
}

void write_daily_forward_csv(const Curve& curve, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw input_error("cannot write daily-forward file '" + path + "'");
    write_daily_forward_csv(curve, os);
}

} // namespace multicurve
