#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "multicurve/calendar.hpp"
#include "multicurve/curve.hpp"
#include "multicurve/daycount.hpp"
#include "multicurve/date.hpp"
#include "multicurve/schedule.hpp"

namespace multicurve {

enum class InstrumentClass { CASH, OIS, IRS, TENOR_SWAP, CNXCS };

InstrumentClass instrument_class_from_string(std::string_view name);
std::string to_string(InstrumentClass cls);

/// Quote tenor: ON / TN money-market labels or a regular parsed tenor.
struct QuoteTenor {
    enum class Kind { ON, TN, REGULAR };
    Kind kind = Kind::REGULAR;
    Tenor tenor{};     // valid when kind == REGULAR
    std::string label; // as written in the file, e.g. "84d", "18m", "ON"

    static QuoteTenor parse(std::string_view text);
    long sort_days() const;
};

/// One market quote. Values are stored exactly as quoted, in percent.
struct Quote {
    InstrumentClass cls = InstrumentClass::CASH;
    std::string index;
    QuoteTenor tenor;
    double value_pct = 0.0;
    std::string profile;

    double value_decimal() const { return value_pct / 100.0; }
};

/// Named convention preset shared by a family of quotes.
struct ConventionProfile {
    std::string name;
    CalendarId calendar = CalendarId::US;
    RollConvention roll = RollConvention::MODIFIED_FOLLOWING;
    int spot_lag_days = 2;
    Tenor float_freq = Tenor::months(3);
    DayCount float_dc = DayCount::ACT_360;
    Tenor fixed_freq = Tenor::months(6);
    DayCount fixed_dc = DayCount::ACT_360;
    StubPolicy stub = StubPolicy::NONE;
    bool single_fixed_coupon = false; // short LIBOR 1m IRS style
    std::string index;                // projected index of the floating leg
    std::string second_index;         // cnXCS / tenor-swap other leg
    std::optional<Tenor> compounding_sub_period;
};

/// Resolves a named profile; throws input_error for unknown names.
const ConventionProfile& convention_profile(const std::string& name);
bool has_convention_profile(const std::string& name);

/// Dated quote collection: one quote per (class, index, tenor), FX spots and
/// the index fixings implied by the cash rows.
struct MarketSnapshot {
    Date as_of;
    std::vector<Quote> quotes;
    std::map<std::string, double> fx_spot;                    // e.g. "USDMXN" -> 15.36
    std::map<std::pair<std::string, Date>, double> fixings;   // (index, period start) -> rate

    std::vector<Quote> by_class(InstrumentClass cls) const;
    const Quote* find(InstrumentClass cls, const std::string& index,
                      const std::string& tenor_label) const;
    double cash_rate(const std::string& index, const std::string& tenor_label) const;

    /// Checks uniqueness/profile resolution and derives `fixings` from the
    /// cash rows of projected indices.
    void validate();
};

/// Quote CSV: comment header block (`# as_of ...`, `# fx PAIR=...`) followed
/// by `class,index,tenor,value_pct,profile` rows. The JSON mirror uses the
/// same field names.
MarketSnapshot load_snapshot(const std::string& path);
MarketSnapshot read_snapshot_csv(std::istream& is, const std::string& origin = "<stream>");
void write_snapshot(const MarketSnapshot& snapshot, std::ostream& os);
void write_snapshot(const MarketSnapshot& snapshot, const std::string& path);
MarketSnapshot snapshot_from_json(const std::string& json_text);
std::string snapshot_to_json(const MarketSnapshot& snapshot);

/// Bundled end-of-day fixtures (May 29 2015). Quote snapshots:
///   usd_ois, usd_libor3m, usd_libor1m_ts, mxn_tiie_xcs, mxn_xcs_stress_base,
///   sd_ois_reference (swap-rate column as calibration input).
MarketSnapshot builtin_fixture(const std::string& name);

/// Reference rows bundled next to a fixture: published discount factors and
/// continuously compounded zero rates per pillar.
struct ReferenceRow {
    std::string tenor;
    Date maturity;
    double swap_rate_pct;
    double discount_factor;
    double zero_rate_pct;
};
std::vector<ReferenceRow> builtin_reference(const std::string& name); // sd_ois_reference, sd_tiie_reference

/// Bundled USD-discount-curve-collateralized-in-EUR input curve
/// (eur_usd_coll_curve), in the curve CSV schema.
Curve builtin_eur_usd_coll_curve();

} // namespace multicurve
