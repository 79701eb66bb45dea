#include <initializer_list>
#include <sstream>

#include "multicurve/errors.hpp"
#include "multicurve/market_data.hpp"

// Bundled end-of-day market data, May 29 2015 (Bloomberg and SuperDerivatives
// pulls). Values are stored exactly as published, in percent.

namespace multicurve {
namespace {

constexpr int kYear = 2015, kMonth = 5, kDay = 29;

struct Row {
    const char* tenor;
    double value_pct;
};

void append(MarketSnapshot& snap, InstrumentClass cls, const std::string& index,
            const std::string& profile, std::initializer_list<Row> rows) {
    for (const Row& r : rows) {
        Quote q;
        q.cls = cls;
        q.index = index;
        q.tenor = QuoteTenor::parse(r.tenor);
        q.value_pct = r.value_pct;
        q.profile = profile;
        snap.quotes.push_back(std::move(q));
    }
}

MarketSnapshot usd_ois_fixture() {
    MarketSnapshot snap;
    snap.as_of = Date::from_ymd(kYear, kMonth, kDay);
    append(snap, InstrumentClass::CASH, "usd_fedfunds", "usd_ois_cash",
           {{"ON", 0.08000}, {"TN", 0.08000}});
    append(snap, InstrumentClass::OIS, "usd_fedfunds", "usd_ois",
           {{"1w", 0.12000},  {"2w", 0.12380},  {"3w", 0.12600},  {"1m", 0.12800},
            {"2m", 0.13400},  {"3m", 0.14100},  {"4m", 0.15400},  {"5m", 0.16900},
            {"6m", 0.18730},  {"7m", 0.20700},  {"8m", 0.22800},  {"9m", 0.24900},
            {"10m", 0.27400}, {"11m", 0.29450}, {"1y", 0.31900},  {"18m", 0.48100},
            {"2y", 0.64900},  {"3y", 0.95500},  {"4y", 1.19680},  {"5y", 1.39600},
            {"6y", 1.56000},  {"7y", 1.69700},  {"8y", 1.80300},  {"9y", 1.89300},
            {"10y", 1.97800}, {"12y", 2.08400}, {"15y", 2.20300}, {"20y", 2.32000},
            {"25y", 2.38100}, {"30y", 2.40800}, {"40y", 2.42800}, {"50y", 2.41800}});
    snap.validate();
    return snap;
}

MarketSnapshot usd_libor3m_fixture() {
    MarketSnapshot snap;
    snap.as_of = Date::from_ymd(kYear, kMonth, kDay);
    append(snap, InstrumentClass::CASH, "usd_depo", "usd_ois_cash",
           {{"ON", 0.12100}, {"TN", 0.17000}});
    append(snap, InstrumentClass::CASH, "usd_libor_3m", "usd_libor_cash", {{"3m", 0.28375}});
    append(snap, InstrumentClass::IRS, "usd_libor_3m", "usd_irs_3m",
           {{"6m", 0.33700},  {"9m", 0.40630},  {"1y", 0.48730},  {"15m", 0.57620},
            {"18m", 0.66570}, {"21m", 0.75710}, {"2y", 0.84950},  {"3y", 1.17050},
            {"4y", 1.42800},  {"5y", 1.63350},  {"6y", 1.80150},  {"7y", 1.93750},
            {"8y", 2.04880},  {"9y", 2.13850},  {"10y", 2.21450}, {"12y", 2.33350},
            {"15y", 2.45250}, {"20y", 2.56800}, {"25y", 2.62150}, {"30y", 2.64950},
            {"40y", 2.66700}, {"50y", 2.64950}});
    snap.validate();
    return snap;
}

MarketSnapshot usd_libor1m_ts_fixture() {
    MarketSnapshot snap;
    snap.as_of = Date::from_ymd(kYear, kMonth, kDay);
    append(snap, InstrumentClass::CASH, "usd_depo", "usd_ois_cash",
           {{"ON", 0.12100}, {"TN", 0.17000}});
    append(snap, InstrumentClass::CASH, "usd_libor_1m", "usd_libor_cash", {{"1m", 0.18400}});
    append(snap, InstrumentClass::IRS, "usd_libor_1m", "usd_irs_1m_short",
           {{"2m", 0.18600}, {"3m", 0.19300}, {"4m", 0.19900},  {"5m", 0.22000},
            {"6m", 0.23600}, {"7m", 0.26000}, {"8m", 0.28100},  {"9m", 0.30130},
            {"10m", 0.32400}, {"11m", 0.34900}});
    // Basis spreads added to the compounded 1m leg (Bloomberg USBA convention;
    // the same numbers are negative when quoted from the 3m-payer side).
    append(snap, InstrumentClass::TENOR_SWAP, "usd_libor_1m_v_3m", "usd_ts_1m3m",
           {{"1y", 0.10369},  {"18m", 0.11156}, {"2y", 0.12011},  {"3y", 0.13154},
            {"4y", 0.13563},  {"5y", 0.13805},  {"6y", 0.13811},  {"7y", 0.13625},
            {"8y", 0.13337},  {"9y", 0.12987},  {"10y", 0.12688}, {"12y", 0.12177},
            {"15y", 0.11802}, {"20y", 0.11801}, {"25y", 0.11875}, {"30y", 0.11938}});
    snap.validate();
    return snap;
}

void append_mxn_common(MarketSnapshot& snap) {
    snap.as_of = Date::from_ymd(kYear, kMonth, kDay);
    snap.fx_spot["USDMXN"] = 15.36;
    append(snap, InstrumentClass::CASH, "mxn_funding", "mx_depo",
           {{"ON", 3.05000}, {"TN", 3.05000}});
    append(snap, InstrumentClass::CASH, "tiie_28d", "mx_depo", {{"28d", 3.29500}});
    append(snap, InstrumentClass::CASH, "usd_libor_1m", "usd_libor_cash", {{"1m", 0.18400}});
    append(snap, InstrumentClass::IRS, "tiie_28d", "tiie_irs",
           {{"84d", 3.32000},   {"168d", 3.43000},  {"252d", 3.56200}, {"364d", 3.73500},
            {"728d", 4.23600},  {"1092d", 4.67100}, {"1456d", 5.05100}, {"1820d", 5.36100},
            {"2548d", 5.86300}, {"3640d", 6.23800}, {"4368d", 6.42800}, {"5460d", 6.63200},
            {"7280d", 6.83100}, {"10920d", 7.02100}});
}

MarketSnapshot mxn_tiie_xcs_fixture() {
    MarketSnapshot snap;
    append_mxn_common(snap);
    append(snap, InstrumentClass::CNXCS, "usdmxn", "usdmxn_cnxcs",
           {{"84d", 0.54000},  {"168d", 0.59000},  {"252d", 0.64000},  {"364d", 0.68000},
            {"728d", 0.72000}, {"1092d", 0.81000}, {"1456d", 0.88000}, {"1820d", 0.92000},
            {"2548d", 1.00500}, {"3640d", 1.04000}, {"4368d", 1.04000}, {"5460d", 1.02000},
            {"7280d", 1.02500}, {"10920d", 1.02500}});
    snap.validate();
    return snap;
}

// Basis-spread levels of the cross-currency stress exercise (its own data
// pull; slightly wider than the calibration set above).
MarketSnapshot mxn_xcs_stress_base_fixture() {
    MarketSnapshot snap;
    append_mxn_common(snap);
    append(snap, InstrumentClass::CNXCS, "usdmxn", "usdmxn_cnxcs",
           {{"84d", 0.55000},  {"168d", 0.60000},  {"252d", 0.65000},  {"364d", 0.69000},
            {"728d", 0.81500}, {"1092d", 0.89000}, {"1456d", 0.98000}, {"1820d", 1.02000},
            {"2548d", 1.08000}, {"3640d", 1.10000}, {"4368d", 1.10000}, {"5460d", 1.08000},
            {"7280d", 1.08500}, {"10920d", 1.08500}});
    snap.validate();
    return snap;
}

MarketSnapshot sd_ois_reference_fixture() {
    MarketSnapshot snap;
    snap.as_of = Date::from_ymd(kYear, kMonth, kDay);
    append(snap, InstrumentClass::CASH, "usd_fedfunds", "usd_ois_cash",
           {{"ON", 0.12100}, {"TN", 0.12100}});
    append(snap, InstrumentClass::OIS, "usd_fedfunds", "usd_ois",
           {{"1m", 0.12800},  {"2m", 0.13200},  {"3m", 0.14200},  {"4m", 0.15400},
            {"5m", 0.17000},  {"6m", 0.18600},  {"9m", 0.25100},  {"1y", 0.32300},
            {"18m", 0.48300}, {"2y", 0.64700},  {"3y", 0.94258},  {"4y", 1.19070},
            {"5y", 1.39274},  {"7y", 1.69758},  {"10y", 1.98045}, {"12y", 2.09662},
            {"15y", 2.21173}, {"20y", 2.32231}, {"25y", 2.37697}, {"30y", 2.40250},
            {"40y", 2.41850}, {"50y", 2.40200}});
    snap.validate();
    return snap;
}

struct RefRow {
    const char* tenor;
    const char* date;
    double swap;
    double df;
    double zero;
};

std::vector<ReferenceRow> make_reference(std::initializer_list<RefRow> rows) {
    std::vector<ReferenceRow> out;
    for (const RefRow& r : rows)
        out.push_back({r.tenor, Date::parse_iso(r.date), r.swap, r.df, r.zero});
    return out;
}

// Published SuperDerivatives USD OIS curve (zero rates on an ACT/365 axis).
std::vector<ReferenceRow> sd_ois_rows() {
    return make_reference({{"1m", "2015-07-02", 0.12800, 0.99988, 0.12923},
                           {"2m", "2015-08-03", 0.13200, 0.99976, 0.13329},
                           {"3m", "2015-09-02", 0.14200, 0.99962, 0.14316},
                           {"4m", "2015-10-02", 0.15400, 0.99946, 0.15512},
                           {"5m", "2015-11-02", 0.17000, 0.99926, 0.17110},
                           {"6m", "2015-12-02", 0.18600, 0.99904, 0.18714},
                           {"9m", "2016-03-02", 0.25100, 0.99808, 0.25239},
                           {"1y", "2016-06-02", 0.32300, 0.99671, 0.32477},
                           {"18m", "2016-12-02", 0.48300, 0.99266, 0.48632},
                           {"2y", "2017-06-02", 0.64700, 0.98696, 0.65204},
                           {"3y", "2018-06-04", 0.94258, 0.97167, 0.95201},
                           {"4y", "2019-06-03", 1.19070, 0.95274, 1.20536},
                           {"5y", "2020-06-02", 1.39274, 0.93157, 1.41304},
                           {"7y", "2022-06-02", 1.69758, 0.88570, 1.72982},
                           {"10y", "2025-06-02", 1.98045, 0.81607, 2.02866},
                           {"12y", "2027-06-02", 2.09662, 0.77200, 2.15300},
                           {"15y", "2030-06-03", 2.21173, 0.71025, 2.27716},
                           {"20y", "2035-06-04", 2.32231, 0.61866, 2.39735},
                           {"25y", "2040-06-04", 2.37697, 0.54082, 2.45516},
                           {"30y", "2045-06-02", 2.40250, 0.47497, 2.47897},
                           {"40y", "2055-06-02", 2.41850, 0.36979, 2.48468},
                           {"50y", "2065-06-02", 2.40200, 0.29453, 2.44244}});
}

std::vector<ReferenceRow> sd_tiie_rows() {
    return make_reference({{"ON", "2015-06-01", 2.60950, 0.99978, 2.64546},
                           {"28d", "2015-06-29", 3.30000, 0.99722, 3.27418},
                           {"84d", "2015-08-24", 3.32500, 0.99207, 3.34202},
                           {"168d", "2015-11-17", 3.43500, 0.98381, 3.46406},
                           {"252d", "2016-02-08", 3.56000, 0.97520, 3.59466},
                           {"364d", "2016-05-30", 3.73000, 0.96280, 3.77051},
                           {"728d", "2017-05-29", 4.23500, 0.91758, 4.29479},
                           {"1092d", "2018-05-28", 4.67000, 0.86708, 4.75416},
                           {"1456d", "2019-05-27", 5.05000, 0.81347, 5.16457},
                           {"1820d", "2020-05-25", 5.36000, 0.75953, 5.50727},
                           {"2548d", "2022-05-23", 5.86500, 0.65342, 6.08870},
                           {"3640d", "2025-05-19", 6.24000, 0.52088, 6.53483},
                           {"5460d", "2030-05-13", 6.63000, 0.34754, 7.06126},
                           {"7280d", "2035-05-07", 6.82500, 0.23028, 7.35954},
                           {"10920d", "2045-04-24", 7.05500, 0.09549, 7.84857}});
}

// USD discount curve collateralized in EUR, bundled as an input (the EURUSD
// market calibration itself is not part of this engine). Zero rates are the
// USD OIS curve plus the EURUSD collateral funding spread.
constexpr const char* kEurUsdCollCurveCsv = R"(# label usd_disc_eur_coll
# valuation 2015-05-29
# method natural_cubic_on_yield
# time_dc ACT_360
pillar_date,zero_rate,discount_factor
2015-08-25,0.00230,0
2015-11-18,0.00260,0
2016-02-10,0.00290,0
2016-05-31,0.00320,0
2017-05-30,0.00430,0
2018-05-29,0.00570,0
2019-05-28,0.00730,0
2020-05-26,0.00910,0
2022-05-24,0.01230,0
2025-05-20,0.01570,0
2027-05-18,0.01730,0
2030-05-14,0.01900,0
2035-05-08,0.02080,0
2045-04-25,0.02260,0
)";

} // namespace

MarketSnapshot builtin_fixture(const std::string& name) {
    if (name == "usd_ois") return usd_ois_fixture();
    if (name == "usd_libor3m") return usd_libor3m_fixture();
    if (name == "usd_libor1m_ts") return usd_libor1m_ts_fixture();
    if (name == "mxn_tiie_xcs") return mxn_tiie_xcs_fixture();
    if (name == "mxn_xcs_stress_base") return mxn_xcs_stress_base_fixture();
    if (name == "sd_ois_reference") return sd_ois_reference_fixture();
    throw input_error("unknown fixture '" + name + "'");
}

std::vector<ReferenceRow> builtin_reference(const std::string& name) {
    if (name == "sd_ois_reference") return sd_ois_rows();
    if (name == "sd_tiie_reference") return sd_tiie_rows();
    throw input_error("unknown reference table '" + name + "'");
}

Curve builtin_eur_usd_coll_curve() {
    std::istringstream is(kEurUsdCollCurveCsv);
    return read_curve_csv(is, "eur_usd_coll_curve");
}

} // namespace multicurve
