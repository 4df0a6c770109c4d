#include "microres/scenario_io.hpp"

namespace microres {

namespace {

struct Row {
    const char* name;
    BoundedRange probability;
    BoundedRange operational;
    BoundedRange infrastructural;
};

ThreatSpec threat(const char* name, BoundedRange probability, double importance, std::initializer_list<Row> rows) {
    ThreatSpec t{name, probability, importance, {}};
    for (const Row& r : rows) t.vulnerabilities.push_back({r.name, r.probability, r.operational, r.infrastructural});
    return t;
}

constexpr BoundedRange R(double lo, double hi) { return {lo, hi}; }

constexpr const char* kDescription =
    "Coastal New England town microgrid: 1 MW rooftop PV, 1 MW wind turbine, 8 MW natural gas "
    "generators, 4 MW / 8 MWh battery storage, above-ground distribution lines. "
    "Where a printed qualitative label and its numeric range disagree, the numeric range is kept, "
    "with three exceptions where the number contradicts both its label and the analogous rows. "
    "Repairs: "
    "[1] Severe Thunderstorm / Clouds and Rain Lead to PV Generation Losses operational impact printed "
    "'Negligible to Very Low 0 - 0.5', encoded as the label [0, 0.05]. "
    "[2] Hail / Infrastructure Damage to PV operational and infrastructural impacts printed "
    "'Negligible to Very Low 0 - 0.5', encoded as the label [0, 0.05]. "
    "[3] Severe Thunderstorm / High Winds and Rain Damage Distribution probability printed '0.01 - 0.5s', "
    "encoded as [0.01, 0.5]. "
    "[4] Electromagnetic Pulse probability and Inverter Damage probability printed 'Very Low 0.01 - 0.5', "
    "encoded as the number [0.01, 0.5]. "
    "[5] Other label/number mismatches keep the number: Hurricane / Clouds and Rain operational impact "
    "[0, 0.05]; Hurricane / High Winds Leads to Turbine Generation Losses probability [0.2, 0.5]; "
    "Hurricane / High Winds Damage Distribution probability [0.05, 0.5]; Fuel Price Spikes probability "
    "[0.01, 0.2]; Drought probability [0.3, 0.5]; Cyberattack and Terrorism probability [0.05, 0.3]. "
    "[6] Drought, Tsunami and Wildfire list no vulnerability; each carries a placeholder 'none' with all "
    "ranges [0, 0.01].";

}  // namespace

Scenario builtin_new_england() {
    const BoundedRange neg = R(0, 0.01);
    const BoundedRange neg_vlow = R(0, 0.05);
    const BoundedRange neg_low = R(0, 0.2);
    const BoundedRange neg_mod = R(0, 0.5);
    const BoundedRange neg_cons = R(0, 0.7);
    const BoundedRange neg_high = R(0, 0.9);
    const BoundedRange neg_vhigh = R(0, 1);
    const BoundedRange very_low = R(0.01, 0.05);
    const BoundedRange vlow_low = R(0.01, 0.2);
    const BoundedRange low = R(0.05, 0.2);
    const BoundedRange considerable = R(0.5, 0.7);
    const BoundedRange high = R(0.7, 0.9);
    const BoundedRange none_row = neg;

    Scenario s;
    s.name = "Coastal New England Microgrid";
    s.description = kDescription;
    s.threats = {
        threat("Hurricane", R(0.2, 0.7), 1,
               {
                   {"Clouds and Rain Lead to PV Generation Losses", considerable, neg_vlow, neg},
                   {"High Winds Leads to Turbine Generation Losses", R(0.2, 0.5), neg_low, neg},
                   {"High Winds Damages PV", low, neg_mod, neg_mod},
                   {"High Winds Damage Turbine", low, neg_mod, neg_mod},
                   {"High Winds Damage Distribution", R(0.05, 0.5), neg_mod, neg_mod},
                   {"Heavy Rains/Storm Surge Damages Generator", low, neg_mod, neg_mod},
                   {"Heavy Rains/Storm Surge Damages Storage", low, neg_mod, neg_mod},
               }),
        threat("Severe Winter Storm", high, 1,
               {
                   {"Snow and Ice Lead to PV Generation Losses", considerable, neg_vlow, neg},
                   {"Snow and Ice Lead to Turbine Generation Losses", vlow_low, neg_low, neg},
                   {"Snow, Ice, and Wind Damages PV", vlow_low, neg_mod, neg_mod},
                   {"Snow, Ice, and Wind Damages Turbine", vlow_low, neg_mod, neg_mod},
                   {"Snow, Ice, and Wind Damages Distribution", R(0.01, 0.5), neg_mod, neg_mod},
               }),
        threat("Severe Thunderstorm", high, 1,
               {
                   {"Clouds and Rain Lead to PV Generation Losses", considerable, neg_vlow, neg},
                   {"High Winds Leads to Turbine Generation Losses", vlow_low, neg_low, neg},
                   {"High Winds and Rain Damage PV", vlow_low, neg_low, neg_low},
                   {"High Winds and Rain Damage Turbine", vlow_low, neg_low, neg_low},
                   {"High Winds and Rain Damage Distribution", R(0.01, 0.5), neg_low, neg_low},
                   {"Lightning Causes Electrical System Damage", very_low, neg_high, neg_mod},
               }),
        threat("Hail", high, 1,
               {
                   {"Infrastructure Damage to PV", vlow_low, neg_vlow, neg_vlow},
               }),
        threat("High Wind", R(0.2, 0.7), 1,
               {
                   {"High Winds Leads to Wind Generation Losses", considerable, neg_low, neg},
                   {"Infrastructure Damage to PV", vlow_low, neg_low, neg_low},
                   {"Infrastructure Damage to Turbine", vlow_low, neg_low, neg_low},
                   {"Infrastructure Damage to Distribution", vlow_low, neg_low, neg_low},
               }),
        threat("Flooding", R(0.05, 0.5), 1,
               {
                   {"Infrastructure Damage to Generator", R(0.01, 0.5), neg_cons, neg_cons},
                   {"Infrastructure Damage to Storage", R(0.01, 0.5), neg_cons, neg_cons},
               }),
        threat("Earthquake", high, 1,
               {
                   {"PV Damage", very_low, neg_low, neg_low},
                   {"Turbine Damage", very_low, neg_low, neg_low},
                   {"Generator Damage", very_low, neg_cons, neg_cons},
                   {"Storage Damage", very_low, neg_cons, neg_cons},
                   {"Distribution Damage", very_low, neg_cons, neg_cons},
               }),
        threat("Tornado", high, 1,
               {
                   {"PV Damage", very_low, neg_low, neg_cons},
                   {"Turbine Damage", very_low, neg_low, neg_cons},
                   {"Generator Damage", very_low, neg_cons, neg_cons},
                   {"Storage Damage", very_low, neg_cons, neg_cons},
                   {"Distribution Damage", very_low, neg_cons, neg_cons},
               }),
        threat("Electromagnetic Pulse (non-lightning)", R(0.01, 0.5), 1,
               {
                   {"Inverter Damage", R(0.01, 0.5), neg_high, neg_mod},
               }),
        threat("Fuel Price Spikes", R(0.01, 0.2), 1,
               {
                   {"Operation Shutdown", vlow_low, neg_cons, neg},
               }),
        threat("Drought", R(0.3, 0.5), 1, {{"none", none_row, none_row, none_row}}),
        threat("Tsunami", neg, 0, {{"none", none_row, none_row, none_row}}),
        threat("Wildfire", neg, 0, {{"none", none_row, none_row, none_row}}),
        threat("Cyberattack / IT Fault", R(0.05, 0.3), 1,
               {
                   {"Controls Override", vlow_low, neg_vhigh, neg},
                   {"PV Damage", very_low, neg_low, neg_low},
                   {"Turbine Damage", very_low, neg_low, neg_low},
                   {"Generator Damage", very_low, neg_cons, neg_cons},
                   {"Storage Damage", very_low, neg_cons, neg_cons},
                   {"Distribution Damage", very_low, neg_vhigh, neg_vhigh},
               }),
        threat("Terrorism / Sabotage / Physical Failure", R(0.05, 0.3), 1,
               {
                   {"PV Damage", R(0.01, 1), neg_low, neg_low},
                   {"Turbine Damage", R(0.01, 1), neg_low, neg_low},
                   {"Generator Damage", R(0.01, 1), neg_cons, neg_cons},
                   {"Storage Damage", R(0.01, 1), neg_cons, neg_cons},
                   {"Distribution Damage", R(0.01, 1), neg_vhigh, neg_vhigh},
               }),
    };
    return s;
}

}  // namespace microres
