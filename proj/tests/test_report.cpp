#include <doctest.h>

#include <regex>
#include <string>

#include "ekr/report.hpp"

using namespace ekr;

namespace {

Json strip_timing(Json doc) {
    doc.erase("timing_ms");
    return doc;
}

bool all_rationals_well_formed(const Json& j) {
    static const std::regex form("-?[0-9]+/[0-9]+");
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.find('/') != std::string::npos)
            return std::regex_match(s, form);
        return true;
    }
    if (j.is_object() || j.is_array())
        for (const auto& v : j)
            if (!all_rationals_well_formed(v)) return false;
    return true;
}

}  // namespace

TEST_CASE("rational round trips") {
    CHECK(rat_str(rat(3, 4)) == "3/4");
    CHECK(rat_str(Rational(-7)) == "-7/1");
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-12") == Rational(-12));
    CHECK(parse_rational(rat_str(rat(-22, 7))) == rat(-22, 7));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("verify document: exhaustive path") {
    auto doc = cmd_verify(5, Action::setwise2);
    CHECK(doc["schema"] == kReportSchema);
    CHECK(doc["command"] == "verify");
    CHECK(doc["n"] == 5);
    CHECK(doc["action"] == "setwise");
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["payload"]["path"] == "exhaustive");
    CHECK(doc["payload"]["alpha"] == 12);
    CHECK(doc["payload"]["bound"] == "12");
    CHECK(all_rationals_well_formed(doc["payload"]));
}

TEST_CASE("verify document: spectral path") {
    auto doc = cmd_verify(11, Action::setwise2);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["payload"]["path"] == "spectral");
    CHECK(doc["payload"]["bound"] == rat_str(Rational(2 * factorial(9))));
    CHECK(all_rationals_well_formed(doc["payload"]));
}

TEST_CASE("verify argument validation") {
    CHECK_THROWS(cmd_verify(1, Action::setwise2));
    CHECK_THROWS(cmd_verify(4, Action::pointwise2));
    CHECK_THROWS(cmd_verify(17, Action::setwise2));
}

TEST_CASE("documents are deterministic up to timing") {
    CHECK(strip_timing(cmd_verify(5, Action::pointwise2)) ==
          strip_timing(cmd_verify(5, Action::pointwise2)));
    CHECK(strip_timing(cmd_spectrum(9, Action::setwise2, std::nullopt)) ==
          strip_timing(cmd_spectrum(9, Action::setwise2, std::nullopt)));
}

TEST_CASE("table3 document reports the defective cells honestly") {
    auto doc = cmd_table3(13);
    CHECK(doc["verdict"] == "fail");  // the printed table has known bad cells
    int bad = 0;
    for (const auto& row : doc["payload"]["rows"])
        if (row["instantiable"].get<bool>())
            for (const auto& cell : row["cells"])
                if (!cell["match"].get<bool>()) ++bad;
    CHECK(bad == 7);
    CHECK(doc["payload"]["collisions"].size() == 1);
    CHECK_THROWS(cmd_table3(12));
}

TEST_CASE("spectrum document with point override") {
    auto inside = cmd_spectrum(9, Action::setwise2, std::nullopt);
    CHECK(inside["verdict"] == "pass");
    CHECK(inside["payload"]["point_inside_polytope"] == true);

    std::vector<Rational> outside_pt{Rational(1000), Rational(1000)};
    auto outside = cmd_spectrum(9, Action::setwise2, outside_pt);
    CHECK(outside["verdict"] == "not-applicable");
    CHECK(outside["payload"]["point_inside_polytope"] == false);
    // targets stay at -1 regardless of the point: the solution family
    for (const auto& row : outside["payload"]["spectrum"]["rows"])
        if (row["lambda"] == "(8,1)") CHECK(row["eigenvalue"] == "-1/1");

    // a 3-coordinate pointwise override off the parity slice is flagged
    std::vector<Rational> off_slice{rat(1, 100), rat(1, 100), rat(1, 100)};
    auto doc3 = cmd_spectrum(10, Action::pointwise2, off_slice);
    CHECK(doc3["verdict"] == "not-applicable");

    CHECK_THROWS(cmd_spectrum(7, Action::setwise2, std::nullopt));
    CHECK_THROWS(cmd_spectrum(9, Action::setwise2, std::vector<Rational>{1}));
}

TEST_CASE("coclique document and applicability") {
    auto doc = cmd_coclique(5, Action::pointwise2);
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["payload"]["alpha"] == 6);
    CHECK(doc["payload"]["graph_degree"] == 89);  // 24+30+20+15 over <=1-fix classes

    auto na = cmd_coclique(4, Action::pointwise2);  // theorem needs n >= 5
    CHECK(na["verdict"] == "not-applicable");

    CHECK_THROWS(cmd_coclique(1, Action::setwise2));
    CHECK_THROWS(cmd_coclique(8, Action::setwise2));
}

TEST_CASE("csv and markdown projections carry the same flattened keys") {
    auto doc = cmd_coclique(4, Action::setwise2);
    auto csv = to_csv(doc);
    auto md = to_markdown(doc);
    // same number of data lines (csv has a header, md has header + separator)
    auto count = [](const std::string& s) {
        long c = 0;
        for (char ch : s)
            if (ch == '\n') ++c;
        return c;
    };
    CHECK(count(csv) - 1 == count(md) - 2);
    CHECK(csv.find("verdict,\"pass\"") != std::string::npos);
    CHECK(md.find("| verdict | pass |") != std::string::npos);

    CHECK(render(doc, "json").find("\"schema\"") != std::string::npos);
    CHECK_THROWS(render(doc, "xml"));
}
