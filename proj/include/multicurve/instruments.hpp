#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multicurve/curve.hpp"
#include "multicurve/market_data.hpp"
#include "multicurve/schedule.hpp"

namespace multicurve {

enum class LegKind { FIXED, IBOR, OVERNIGHT_COMPOUNDED, IBOR_COMPOUNDED };

/// One swap leg. `rate_or_spread` is the fixed rate for FIXED legs and the
/// additive spread for floating legs. IBOR_COMPOUNDED legs compound the
/// sub-period fixings and add the spread afterwards (simple-spread
/// convention).
struct LegSpec {
    LegKind kind = LegKind::FIXED;
    Schedule schedule;
    double rate_or_spread = 0.0;
    std::string index;   // empty for FIXED
    double notional = 0.0;
    std::string currency;
    bool notional_exchange = false;
    bool mtm_reset = false; // FX-resetting leg of a mtmXCS
    std::optional<Tenor> compounding_sub_period;
    std::vector<std::vector<Date>> sub_period_bounds; // per coupon, for IBOR_COMPOUNDED
};

struct SwapSpec {
    std::string id;
    LegSpec pay_leg;
    LegSpec receive_leg;
    Date trade_date;
    std::optional<double> fx_fixing;        // f0 fixing the cnXCS notional ratio
    std::optional<std::string> collateral;  // collateral currency; nullopt = uncollateralized
};

/// Curve/fixing registry the pricers resolve against. Uncollateralized
/// discounting is keyed with collateral "NONE".
class PricingContext {
public:
    Date valuation;

    void set_discount(const std::string& currency, const std::string& collateral, const Curve* c);
    void set_forward(const std::string& index, ForwardCurveView view);
    void set_fixing(const std::string& index, Date period_start, double rate);
    void set_fx_spot(const std::string& pair, double rate);
    void merge_fixings(const std::map<std::pair<std::string, Date>, double>& fixings);
    void merge_fx(const std::map<std::string, double>& fx);

    const Curve& discount(const std::string& currency,
                          const std::optional<std::string>& collateral) const;
    const ForwardCurveView& forward(const std::string& index) const;
    std::optional<double> fixing(const std::string& index, Date period_start) const;
    /// Spot conversion factor from `from`-currency units into `to`.
    double fx_factor(const std::string& from, const std::string& to) const;

private:
    std::map<std::pair<std::string, std::string>, const Curve*> discount_;
    std::map<std::string, ForwardCurveView> forwards_;
    std::map<std::pair<std::string, Date>, double> fixings_;
    std::map<std::string, double> fx_spot_;
};

/// Value of one leg in its own currency (coupons plus notional exchanges).
double leg_value(const LegSpec& leg, const PricingContext& ctx,
                 const std::optional<std::string>& collateral,
                 const LegSpec* other_leg = nullptr);

/// Present values, all from the payer/receive-leg perspective of the spec.
double pv_irs(const SwapSpec& spec, const PricingContext& ctx);
double pv_ois(const SwapSpec& spec, const PricingContext& ctx);
double pv_tenor_swap(const SwapSpec& spec, const PricingContext& ctx);
double pv_cnxcs(const SwapSpec& spec, const PricingContext& ctx, const std::string& report_ccy);
double pv_mtmxcs(const SwapSpec& spec, const PricingContext& ctx, const std::string& report_ccy);
/// Generic dispatch used by par_rate and the calibration loops.
double pv_swap(const SwapSpec& spec, const PricingContext& ctx, const std::string& report_ccy);

enum class ParTarget { PAY_LEG, RECEIVE_LEG };

/// Rate or spread on the designated leg that zeroes the PV. The PV is affine
/// in every supported scalar, so this is a two-evaluation solve (a bisection
/// fallback guards the degenerate case).
double par_rate(const SwapSpec& spec, const PricingContext& ctx,
                ParTarget target = ParTarget::PAY_LEG, const std::string& report_ccy = "");

/// Quote-to-instrument builders (conventions resolved through the profile).
SwapSpec make_vanilla_irs(Date trade, const ConventionProfile& profile, Tenor tenor,
                          double fixed_rate, double notional, const std::string& currency,
                          const std::string& collateral);
SwapSpec make_ois(Date trade, const ConventionProfile& profile, Tenor tenor, double fixed_rate,
                  double notional, const std::string& currency, const std::string& collateral);
SwapSpec make_short_irs_1m(Date trade, const ConventionProfile& profile, Tenor tenor,
                           double fixed_rate, double notional, const std::string& currency,
                           const std::string& collateral);
SwapSpec make_tenor_swap(Date trade, const ConventionProfile& profile, Tenor tenor, double spread,
                         double notional, const std::string& currency,
                         const std::string& collateral);
SwapSpec make_usdmxn_cnxcs(Date trade, const ConventionProfile& profile, Tenor tenor,
                           double usd_spread, double usd_notional, double fx_fixing,
                           const std::string& collateral);
/// Dispatch on the quote's instrument class; notional in the quote currency.
SwapSpec instrument_from_quote(const Quote& quote, Date as_of, double notional);

} // namespace multicurve
