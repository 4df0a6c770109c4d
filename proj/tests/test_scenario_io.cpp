#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "microres/intervention.hpp"
#include "microres/scenario_io.hpp"
#include "test_support.hpp"

using namespace microres;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kMinimal = R"({
  "name": "mini",
  "threats": [
    {
      "name": "Storm",
      "probability": {"rating": "Moderate to Considerable"},
      "importance": 1,
      "vulnerabilities": [
        {
          "name": "Lines",
          "probability": {"lo": 0.05, "hi": 0.2},
          "operational_impact": {"rating": "Negligible to Low"},
          "infrastructural_impact": {"lo": 0, "hi": 0.01, "label": "Negligible"}
        }
      ]
    }
  ]
})";

template <class F>
DocumentError document_error(F&& f) {
    try {
        f();
    } catch (const DocumentError& e) {
        return e;
    }
    FAIL("expected DocumentError");
    return DocumentError("", "");
}

}  // namespace

TEST_CASE("parse a minimal scenario with labels and numbers") {
    const Scenario s = parse_scenario(kMinimal);
    CHECK(s.name == "mini");
    CHECK(s.description.empty());
    REQUIRE(s.threats.size() == 1);
    CHECK(s.threats[0].probability == BoundedRange{0.2, 0.7});
    const auto& v = s.threats[0].vulnerabilities.at(0);
    CHECK(v.probability == BoundedRange{0.05, 0.2});
    CHECK(v.operational_impact == BoundedRange{0.0, 0.2});
    CHECK(v.infrastructural_impact == BoundedRange{0.0, 0.01});
}

TEST_CASE("document errors carry a path or a position") {
    SUBCASE("malformed JSON") {
        const auto e = document_error([] { (void)parse_scenario("{\n  \"name\": \"x\",\n  oops\n}"); });
        CHECK(e.line() == 3);
        CHECK(e.column() >= 3);
    }
    SUBCASE("empty input") {
        const auto e = document_error([] { (void)parse_scenario(""); });
        CHECK(e.line() == 1);
    }
    SUBCASE("unknown key rejected in strict mode, accepted when lenient") {
        std::string doc = kMinimal;
        doc.insert(doc.find("\"name\": \"Lines\""), "\"colour\": \"red\", ");
        const auto e = document_error([&] { (void)parse_scenario(doc); });
        CHECK(e.path() == "/threats/0/vulnerabilities/0/colour");
        CHECK(parse_scenario(doc, {true}).threats[0].vulnerabilities[0].name == "Lines");
    }
    SUBCASE("wrong type") {
        std::string doc = kMinimal;
        doc.replace(doc.find("\"importance\": 1"), 15, "\"importance\": \"high\"");
        CHECK(document_error([&] { (void)parse_scenario(doc); }).path() == "/threats/0/importance");
    }
    SUBCASE("missing key") {
        CHECK(document_error([] { (void)parse_scenario(R"({"name":"x"})"); }).path() == "/threats");
    }
    SUBCASE("unknown rating label") {
        std::string doc = kMinimal;
        doc.replace(doc.find("Moderate to Considerable"), 24, "Apocalyptic");
        CHECK(document_error([&] { (void)parse_scenario(doc); }).path() == "/threats/0/probability/rating");
    }
    SUBCASE("rating together with numbers") {
        std::string doc = kMinimal;
        doc.replace(doc.find("{\"rating\": \"Moderate to Considerable\"}"), 38,
                    R"({"rating": "Low", "lo": 0.05, "hi": 0.2})");
        CHECK(document_error([&] { (void)parse_scenario(doc); }).path() == "/threats/0/probability");
    }
    SUBCASE("root must be an object") {
        CHECK(document_error([] { (void)parse_scenario("[]"); }).path() == "/");
    }
}

TEST_CASE("validation errors list every problem") {
    std::string doc = kMinimal;
    doc.replace(doc.find("\"importance\": 1"), 15, "\"importance\": 1.5");
    doc.replace(doc.find("{\"lo\": 0.05, \"hi\": 0.2}"), 23, "{\"lo\": 0.3, \"hi\": 0.2}");
    try {
        (void)parse_scenario(doc);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE(e.issues().size() == 2);
        CHECK(e.issues()[0].path == "threats[0].importance");
        CHECK(e.issues()[1].path == "threats[0].vulnerabilities[0].probability");
    }
}

TEST_CASE("serialization is canonical") {
    const std::string a = serialize_scenario(parse_scenario(kMinimal));
    CHECK(a.back() == '\n');
    CHECK(a.find("\"label\": \"Moderate to Considerable\"") != std::string::npos);
    CHECK(a.find("\"lo\": 0.05") != std::string::npos);
    CHECK(serialize_scenario(parse_scenario(a)) == a);
    // keys sorted
    CHECK(a.find("\"description\"") < a.find("\"name\""));
    CHECK(a.find("\"name\"") < a.find("\"threats\""));
}

TEST_CASE("round trip of random scenarios (property)") {
    std::mt19937_64 gen(1234);
    for (int k = 0; k < 200; ++k) {
        const Scenario s = testing::random_scenario(gen);
        const std::string text = serialize_scenario(s);
        const Scenario back = parse_scenario(text);
        CHECK(back == s);
        CHECK(serialize_scenario(back) == text);
    }
    const Scenario ne = builtin_new_england();
    CHECK(parse_scenario(serialize_scenario(ne)) == ne);
}

TEST_CASE("awkward doubles survive the round trip") {
    Scenario s = parse_scenario(kMinimal);
    s.threats[0].probability = {0.1 + 0.2, 1.0 / 3.0};
    s.threats[0].importance = 5e-324;
    s.threats[0].vulnerabilities[0].probability = {std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)};
    CHECK(parse_scenario(serialize_scenario(s)) == s);
}

namespace {

// The register as printed in the source table, one row per pair, with the
// repaired cells already applied. Kept separate from the library's copy.
const char* kTable = R"(Hurricane|0.2 0.7|1|Clouds and Rain Lead to PV Generation Losses|0.5 0.7|0 0.05|0 0.01
Hurricane|0.2 0.7|1|High Winds Leads to Turbine Generation Losses|0.2 0.5|0 0.2|0 0.01
Hurricane|0.2 0.7|1|High Winds Damages PV|0.05 0.2|0 0.5|0 0.5
Hurricane|0.2 0.7|1|High Winds Damage Turbine|0.05 0.2|0 0.5|0 0.5
Hurricane|0.2 0.7|1|High Winds Damage Distribution|0.05 0.5|0 0.5|0 0.5
Hurricane|0.2 0.7|1|Heavy Rains/Storm Surge Damages Generator|0.05 0.2|0 0.5|0 0.5
Hurricane|0.2 0.7|1|Heavy Rains/Storm Surge Damages Storage|0.05 0.2|0 0.5|0 0.5
Severe Winter Storm|0.7 0.9|1|Snow and Ice Lead to PV Generation Losses|0.5 0.7|0 0.05|0 0.01
Severe Winter Storm|0.7 0.9|1|Snow and Ice Lead to Turbine Generation Losses|0.01 0.2|0 0.2|0 0.01
Severe Winter Storm|0.7 0.9|1|Snow, Ice, and Wind Damages PV|0.01 0.2|0 0.5|0 0.5
Severe Winter Storm|0.7 0.9|1|Snow, Ice, and Wind Damages Turbine|0.01 0.2|0 0.5|0 0.5
Severe Winter Storm|0.7 0.9|1|Snow, Ice, and Wind Damages Distribution|0.01 0.5|0 0.5|0 0.5
Severe Thunderstorm|0.7 0.9|1|Clouds and Rain Lead to PV Generation Losses|0.5 0.7|0 0.05|0 0.01
Severe Thunderstorm|0.7 0.9|1|High Winds Leads to Turbine Generation Losses|0.01 0.2|0 0.2|0 0.01
Severe Thunderstorm|0.7 0.9|1|High Winds and Rain Damage PV|0.01 0.2|0 0.2|0 0.2
Severe Thunderstorm|0.7 0.9|1|High Winds and Rain Damage Turbine|0.01 0.2|0 0.2|0 0.2
Severe Thunderstorm|0.7 0.9|1|High Winds and Rain Damage Distribution|0.01 0.5|0 0.2|0 0.2
Severe Thunderstorm|0.7 0.9|1|Lightning Causes Electrical System Damage|0.01 0.05|0 0.9|0 0.5
Hail|0.7 0.9|1|Infrastructure Damage to PV|0.01 0.2|0 0.05|0 0.05
High Wind|0.2 0.7|1|High Winds Leads to Wind Generation Losses|0.5 0.7|0 0.2|0 0.01
High Wind|0.2 0.7|1|Infrastructure Damage to PV|0.01 0.2|0 0.2|0 0.2
High Wind|0.2 0.7|1|Infrastructure Damage to Turbine|0.01 0.2|0 0.2|0 0.2
High Wind|0.2 0.7|1|Infrastructure Damage to Distribution|0.01 0.2|0 0.2|0 0.2
Flooding|0.05 0.5|1|Infrastructure Damage to Generator|0.01 0.5|0 0.7|0 0.7
Flooding|0.05 0.5|1|Infrastructure Damage to Storage|0.01 0.5|0 0.7|0 0.7
Earthquake|0.7 0.9|1|PV Damage|0.01 0.05|0 0.2|0 0.2
Earthquake|0.7 0.9|1|Turbine Damage|0.01 0.05|0 0.2|0 0.2
Earthquake|0.7 0.9|1|Generator Damage|0.01 0.05|0 0.7|0 0.7
Earthquake|0.7 0.9|1|Storage Damage|0.01 0.05|0 0.7|0 0.7
Earthquake|0.7 0.9|1|Distribution Damage|0.01 0.05|0 0.7|0 0.7
Tornado|0.7 0.9|1|PV Damage|0.01 0.05|0 0.2|0 0.7
Tornado|0.7 0.9|1|Turbine Damage|0.01 0.05|0 0.2|0 0.7
Tornado|0.7 0.9|1|Generator Damage|0.01 0.05|0 0.7|0 0.7
Tornado|0.7 0.9|1|Storage Damage|0.01 0.05|0 0.7|0 0.7
Tornado|0.7 0.9|1|Distribution Damage|0.01 0.05|0 0.7|0 0.7
Electromagnetic Pulse (non-lightning)|0.01 0.5|1|Inverter Damage|0.01 0.5|0 0.9|0 0.5
Fuel Price Spikes|0.01 0.2|1|Operation Shutdown|0.01 0.2|0 0.7|0 0.01
Drought|0.3 0.5|1|none|0 0.01|0 0.01|0 0.01
Tsunami|0 0.01|0|none|0 0.01|0 0.01|0 0.01
Wildfire|0 0.01|0|none|0 0.01|0 0.01|0 0.01
Cyberattack / IT Fault|0.05 0.3|1|Controls Override|0.01 0.2|0 1|0 0.01
Cyberattack / IT Fault|0.05 0.3|1|PV Damage|0.01 0.05|0 0.2|0 0.2
Cyberattack / IT Fault|0.05 0.3|1|Turbine Damage|0.01 0.05|0 0.2|0 0.2
Cyberattack / IT Fault|0.05 0.3|1|Generator Damage|0.01 0.05|0 0.7|0 0.7
Cyberattack / IT Fault|0.05 0.3|1|Storage Damage|0.01 0.05|0 0.7|0 0.7
Cyberattack / IT Fault|0.05 0.3|1|Distribution Damage|0.01 0.05|0 1|0 1
Terrorism / Sabotage / Physical Failure|0.05 0.3|1|PV Damage|0.01 1|0 0.2|0 0.2
Terrorism / Sabotage / Physical Failure|0.05 0.3|1|Turbine Damage|0.01 1|0 0.2|0 0.2
Terrorism / Sabotage / Physical Failure|0.05 0.3|1|Generator Damage|0.01 1|0 0.7|0 0.7
Terrorism / Sabotage / Physical Failure|0.05 0.3|1|Storage Damage|0.01 1|0 0.7|0 0.7
Terrorism / Sabotage / Physical Failure|0.05 0.3|1|Distribution Damage|0.01 1|0 1|0 1
)";

BoundedRange pair_of(const std::string& text) {
    std::istringstream in(text);
    BoundedRange r;
    in >> r.lo >> r.hi;
    return r;
}

}  // namespace

TEST_CASE("built-in register matches an independent transcription") {
    const Scenario s = builtin_new_england();
    std::istringstream rows(kTable);
    std::string line;
    std::size_t count = 0;
    while (std::getline(rows, line)) {
        std::vector<std::string> f;
        std::istringstream cells(line);
        for (std::string c; std::getline(cells, c, '|');) f.push_back(c);
        REQUIRE(f.size() == 7);
        CAPTURE(line);
        const ThreatSpec* t = s.find_threat(f[0]);
        REQUIRE(t != nullptr);
        CHECK(t->probability == pair_of(f[1]));
        CHECK(t->importance == std::stod(f[2]));
        const VulnerabilitySpec* v = t->find_vulnerability(f[3]);
        REQUIRE(v != nullptr);
        CHECK(v->probability == pair_of(f[4]));
        CHECK(v->operational_impact == pair_of(f[5]));
        CHECK(v->infrastructural_impact == pair_of(f[6]));
        ++count;
    }
    CHECK(count == 51);
    CHECK(s.pair_count() == count);
    CHECK(s.threats.size() == 15);
}

TEST_CASE("shipped data files equal the serialized built-ins") {
    const std::string dir = MICRORES_DATA_DIR;
    CHECK(read_file(dir + "/new_england.json") == serialize_scenario(builtin_new_england()));
    CHECK(read_file(dir + "/patches/underground_distribution.json") ==
          serialize_patch(builtin_underground_distribution()));
    CHECK(read_file(dir + "/patches/harden_generation.json") == serialize_patch(builtin_harden_generation()));
}

TEST_CASE("patch documents") {
    const Scenario ne = builtin_new_england();
    for (const InterventionPatch& p : {builtin_underground_distribution(), builtin_harden_generation()}) {
        const std::string text = serialize_patch(p);
        CHECK(parse_patch(text) == p);
        CHECK(parse_patch(text, ne) == p);
    }

    SUBCASE("unknown op kind") {
        const auto e = document_error(
            [] { (void)parse_patch(R"({"name":"p","ops":[{"kind":"teleport","threat":"Hail"}]})"); });
        CHECK(e.path() == "/ops/0/kind");
        CHECK(std::string(e.what()).find("unknown op kind") != std::string::npos);
    }
    SUBCASE("unresolvable reference names the entity") {
        const char* doc = R"({"name":"p","ops":[
            {"kind":"set_importance","threat":"Hail","importance":0.5},
            {"kind":"set_vulnerability_probability","threat":"Hail","vulnerability":"Roof","range":{"rating":"Low"}}]})";
        CHECK_NOTHROW((void)parse_patch(doc));
        try {
            (void)parse_patch(doc, ne);
            FAIL("expected ValidationError");
        } catch (const ValidationError& e) {
            REQUIRE(e.issues().size() == 1);
            CHECK(e.issues()[0].path.rfind("/ops/1", 0) == 0);
            CHECK(e.issues()[0].message.find("Roof") != std::string::npos);
        }
    }
    SUBCASE("out of range scalar") {
        CHECK(document_error([] {
                  (void)parse_patch(R"({"name":"p","ops":[{"kind":"set_importance","threat":"Hail","importance":3}]})");
              }).path() == "/ops/0/importance");
    }
    SUBCASE("bad dimension") {
        CHECK(document_error([] {
                  (void)parse_patch(R"({"name":"p","ops":[{"kind":"cap_impact","threat":"Hail",
                      "vulnerability":"Infrastructure Damage to PV","dimension":"financial","max_hi":0.1}]})");
              }).path() == "/ops/0/dimension");
    }
    SUBCASE("empty name") {
        CHECK(document_error([] { (void)parse_patch(R"({"name":"","ops":[]})"); }).path() == "/name");
    }
}
