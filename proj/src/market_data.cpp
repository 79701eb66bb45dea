#include "multicurve/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "multicurve/errors.hpp"

namespace multicurve {

InstrumentClass instrument_class_from_string(std::string_view name) {
    if (name == "CASH") return InstrumentClass::CASH;
    if (name == "OIS") return InstrumentClass::OIS;
    if (name == "IRS") return InstrumentClass::IRS;
    if (name == "TENOR_SWAP") return InstrumentClass::TENOR_SWAP;
    if (name == "CNXCS") return InstrumentClass::CNXCS;
    throw input_error("unknown instrument class '" + std::string(name) + "'");
}

std::string to_string(InstrumentClass cls) {
    switch (cls) {
    case InstrumentClass::CASH: return "CASH";
    case InstrumentClass::OIS: return "OIS";
    case InstrumentClass::IRS: return "IRS";
    case InstrumentClass::TENOR_SWAP: return "TENOR_SWAP";
    case InstrumentClass::CNXCS: return "CNXCS";
    }
    return "?";
}

QuoteTenor QuoteTenor::parse(std::string_view text) {
    QuoteTenor qt;
    qt.label = std::string(text);
    if (text == "ON") {
        qt.kind = Kind::ON;
        return qt;
    }
    if (text == "TN") {
        qt.kind = Kind::TN;
        return qt;
    }
    qt.kind = Kind::REGULAR;
    qt.tenor = Tenor::parse(text);
    return qt;
}

long QuoteTenor::sort_days() const {
    switch (kind) {
    case Kind::ON: return 1;
    case Kind::TN: return 2;
    case Kind::REGULAR: return tenor.approx_days();
    }
    return 0;
}

namespace {

std::map<std::string, ConventionProfile> make_profiles() {
    std::map<std::string, ConventionProfile> m;
    auto add = [&](ConventionProfile p) { m.emplace(p.name, std::move(p)); };

    // Money-market deposits.
    {
        ConventionProfile p;
        p.name = "mx_depo";
        p.calendar = CalendarId::MX;
        p.roll = RollConvention::FOLLOWING;
        p.spot_lag_days = 1;
        p.float_dc = DayCount::ACT_360;
        p.index = "tiie_28d";
        add(p);
    }
    {
        ConventionProfile p;
        p.name = "usd_ois_cash";
        p.calendar = CalendarId::US;
        p.roll = RollConvention::FOLLOWING;
        p.spot_lag_days = 0;
        p.float_dc = DayCount::ACT_360;
        p.index = "usd_fedfunds";
        add(p);
    }
    {
        ConventionProfile p;
        p.name = "usd_libor_cash";
        p.calendar = CalendarId::US_UK;
        p.roll = RollConvention::MODIFIED_FOLLOWING;
        p.spot_lag_days = 2;
        p.float_dc = DayCount::ACT_360;
        add(p); // index set per row
    }

    // TIIE 28d plain vanilla IRS: 28d coupons, Following, Mexico City, 1 open day.
    {
        ConventionProfile p;
        p.name = "tiie_irs";
        p.calendar = CalendarId::MX;
        p.roll = RollConvention::FOLLOWING;
        p.spot_lag_days = 1;
        p.float_freq = Tenor::days(28);
        p.float_dc = DayCount::ACT_360;
        p.fixed_freq = Tenor::days(28);
        p.fixed_dc = DayCount::ACT_360;
        p.index = "tiie_28d";
        add(p);
    }

    // USDMXN constant-notional XCS: TIIE 28d vs LIBOR 1m + spread, 2 open days, US-MX.
    {
        ConventionProfile p;
        p.name = "usdmxn_cnxcs";
        p.calendar = CalendarId::US_MX;
        p.roll = RollConvention::FOLLOWING;
        p.spot_lag_days = 2;
        p.float_freq = Tenor::days(28);
        p.float_dc = DayCount::ACT_360;
        p.fixed_freq = Tenor::days(28);
        p.fixed_dc = DayCount::ACT_360;
        p.index = "tiie_28d";
        p.second_index = "usd_libor_1m";
        add(p);
    }

    // USD OIS: annual ACT/360 both legs, Mod Fol, New York; single payment up
    // to 1y; the 18m tenor carries an upfront short stub (6m then 12m).
    {
        ConventionProfile p;
        p.name = "usd_ois";
        p.calendar = CalendarId::US;
        p.roll = RollConvention::MODIFIED_FOLLOWING;
        p.spot_lag_days = 2;
        p.float_freq = Tenor::months(12);
        p.float_dc = DayCount::ACT_360;
        p.fixed_freq = Tenor::months(12);
        p.fixed_dc = DayCount::ACT_360;
        p.stub = StubPolicy::UPFRONT_SHORT;
        p.index = "usd_fedfunds";
        add(p);
    }

    // USD LIBOR 3m vanilla IRS: quarterly ACT/360 float vs semiannual 30/360 fixed.
    {
        ConventionProfile p;
        p.name = "usd_irs_3m";
        p.calendar = CalendarId::US_UK;
        p.roll = RollConvention::MODIFIED_FOLLOWING;
        p.spot_lag_days = 2;
        p.float_freq = Tenor::months(3);
        p.float_dc = DayCount::ACT_360;
        p.fixed_freq = Tenor::months(6);
        p.fixed_dc = DayCount::THIRTY_360;
        p.stub = StubPolicy::UPFRONT_SHORT;
        p.index = "usd_libor_3m";
        add(p);
    }

    // Short USD LIBOR 1m IRS (2m..12m): monthly float, one fixed coupon at maturity.
    {
        ConventionProfile p;
        p.name = "usd_irs_1m_short";
        p.calendar = CalendarId::US_UK;
        p.roll = RollConvention::MODIFIED_FOLLOWING;
        p.spot_lag_days = 2;
        p.float_freq = Tenor::months(1);
        p.float_dc = DayCount::ACT_360;
        p.fixed_dc = DayCount::ACT_360;
        p.single_fixed_coupon = true;
        p.index = "usd_libor_1m";
        add(p);
    }

    // USD 1m-vs-3m tenor swap: quarterly payments both legs, the 1m leg
    // compounds monthly fixings (simple spread added after compounding).
    {
        ConventionProfile p;
        p.name = "usd_ts_1m3m";
        p.calendar = CalendarId::US_UK;
        p.roll = RollConvention::MODIFIED_FOLLOWING;
        p.spot_lag_days = 2;
        p.float_freq = Tenor::months(3);
        p.float_dc = DayCount::ACT_360;
        p.fixed_freq = Tenor::months(3);
        p.fixed_dc = DayCount::ACT_360;
        p.index = "usd_libor_3m";
        p.second_index = "usd_libor_1m";
        p.compounding_sub_period = Tenor::months(1);
        add(p);
    }

    return m;
}

const std::map<std::string, ConventionProfile>& profiles() {
    static const auto m = make_profiles();
    return m;
}

} // namespace

const ConventionProfile& convention_profile(const std::string& name) {
    const auto it = profiles().find(name);
    if (it == profiles().end()) throw input_error("unknown convention profile '" + name + "'");
    return it->second;
}

bool has_convention_profile(const std::string& name) { return profiles().count(name) != 0; }

std::vector<Quote> MarketSnapshot::by_class(InstrumentClass cls) const {
    std::vector<Quote> out;
    for (const Quote& q : quotes)
        if (q.cls == cls) out.push_back(q);
    std::sort(out.begin(), out.end(),
              [](const Quote& a, const Quote& b) { return a.tenor.sort_days() < b.tenor.sort_days(); });
    return out;
}

const Quote* MarketSnapshot::find(InstrumentClass cls, const std::string& index,
                                  const std::string& tenor_label) const {
    for (const Quote& q : quotes)
        if (q.cls == cls && q.index == index && q.tenor.label == tenor_label) return &q;
    return nullptr;
}

double MarketSnapshot::cash_rate(const std::string& index, const std::string& tenor_label) const {
    const Quote* q = find(InstrumentClass::CASH, index, tenor_label);
    if (!q) throw input_error("snapshot is missing cash quote " + index + " " + tenor_label);
    return q->value_decimal();
}

void MarketSnapshot::validate() {
    std::set<std::tuple<InstrumentClass, std::string, std::string>> seen;
    for (const Quote& q : quotes) {
        if (!std::isfinite(q.value_pct))
            throw input_error("non-finite quote " + q.index + " " + q.tenor.label);
        if (!has_convention_profile(q.profile))
            throw input_error("quote " + q.index + " " + q.tenor.label +
                              " names unknown convention profile '" + q.profile + "'");
        if (!seen.insert({q.cls, q.index, q.tenor.label}).second)
            throw input_error("duplicate quote (" + to_string(q.cls) + ", " + q.index + ", " +
                              q.tenor.label + ")");
    }
    // Cash rows of projected indices define the fixing known on as_of for the
    // period starting at the profile's spot date.
    fixings.clear();
    const CalendarSet& cals = CalendarSet::bundled();
    for (const Quote& q : quotes) {
        if (q.cls != InstrumentClass::CASH || q.tenor.kind != QuoteTenor::Kind::REGULAR) continue;
        if (q.index != "tiie_28d" && q.index != "usd_libor_1m" && q.index != "usd_libor_3m")
            continue;
        const ConventionProfile& p = convention_profile(q.profile);
        const Date start = cals.add_open_days(as_of, p.spot_lag_days, p.calendar);
        fixings[{q.index, start}] = q.value_decimal();
    }
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

} // namespace

MarketSnapshot read_snapshot_csv(std::istream& is, const std::string& origin) {
    MarketSnapshot snap;
    bool have_as_of = false;
    bool header_seen = false;
    std::string line;
    long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hdr(line.substr(1));
            std::string key;
            hdr >> key;
            if (key == "as_of") {
                std::string value;
                hdr >> value;
                snap.as_of = Date::parse_iso(value);
                have_as_of = true;
            } else if (key == "fx") {
                std::string kv;
                hdr >> kv;
                const auto eq = kv.find('=');
                if (eq == std::string::npos)
                    throw parse_error(origin + ": malformed fx header '" + line + "'", lineno);
                snap.fx_spot[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
            }
            continue;
        }
        if (line.rfind("class,", 0) == 0) {
            header_seen = true;
            continue;
        }
        if (!header_seen)
            throw parse_error(origin + ": quote row before column header", lineno);
        std::istringstream row(line);
        std::string cls_s, index_s, tenor_s, value_s, profile_s;
        if (!std::getline(row, cls_s, ',') || !std::getline(row, index_s, ',') ||
            !std::getline(row, tenor_s, ',') || !std::getline(row, value_s, ',') ||
            !std::getline(row, profile_s, ','))
            throw parse_error(origin + ": malformed quote row '" + line + "'", lineno);
        Quote q;
        try {
            q.cls = instrument_class_from_string(cls_s);
            q.index = index_s;
            q.tenor = QuoteTenor::parse(tenor_s);
            q.value_pct = std::stod(value_s);
            q.profile = profile_s;
        } catch (const std::exception& e) {
            throw parse_error(origin + ": " + e.what(), lineno);
        }
        snap.quotes.push_back(std::move(q));
    }
    if (!have_as_of) throw parse_error(origin + ": missing '# as_of' header", 0);
    try {
        snap.validate();
    } catch (const input_error& e) {
        throw parse_error(origin + ": " + e.what(), 0);
    }
    return snap;
}

MarketSnapshot load_snapshot(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw input_error("cannot open snapshot file '" + path + "'");
    return read_snapshot_csv(is, path);
}

void write_snapshot(const MarketSnapshot& snapshot, std::ostream& os) {
    os << "# as_of " << snapshot.as_of.to_iso() << "\n";
    for (const auto& [pair, rate] : snapshot.fx_spot) os << "# fx " << pair << "=" << fmt(rate) << "\n";
    os << "class,index,tenor,value_pct,profile\n";
    for (const Quote& q : snapshot.quotes)
        os << to_string(q.cls) << "," << q.index << "," << q.tenor.label << "," << fmt(q.value_pct)
           << "," << q.profile << "\n";
}

void write_snapshot(const MarketSnapshot& snapshot, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw input_error("cannot write snapshot file '" + path + "'");
    write_snapshot(snapshot, os);
}

MarketSnapshot snapshot_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    MarketSnapshot snap;
    snap.as_of = Date::parse_iso(j.at("as_of").get<std::string>());
    if (j.contains("fx_spot"))
        for (const auto& [pair, rate] : j.at("fx_spot").items())
            snap.fx_spot[pair] = rate.get<double>();
    for (const auto& jq : j.at("quotes")) {
        Quote q;
        q.cls = instrument_class_from_string(jq.at("class").get<std::string>());
        q.index = jq.at("index").get<std::string>();
        q.tenor = QuoteTenor::parse(jq.at("tenor").get<std::string>());
        q.value_pct = jq.at("value_pct").get<double>();
        q.profile = jq.at("profile").get<std::string>();
        snap.quotes.push_back(std::move(q));
    }
    snap.validate();
    return snap;
}

std::string snapshot_to_json(const MarketSnapshot& snapshot) {
    nlohmann::json j;
    j["as_of"] = snapshot.as_of.to_iso();
    j["fx_spot"] = nlohmann::json::object();
    for (const auto& [pair, rate] : snapshot.fx_spot) j["fx_spot"][pair] = rate;
    j["quotes"] = nlohmann::json::array();
    for (const Quote& q : snapshot.quotes) {
        nlohmann::json jq;
        jq["class"] = to_string(q.cls);
        jq["index"] = q.index;
        jq["tenor"] = q.tenor.label;
        jq["value_pct"] = q.value_pct;
        jq["profile"] = q.profile;
        j["quotes"].push_back(std::move(jq));
    }
    return j.dump(2);
}

} // namespace multicurve
