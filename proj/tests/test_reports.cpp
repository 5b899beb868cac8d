#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <hgmpl/report_io.hpp>

using namespace hgmpl;

TEST_CASE("json lines round trip") {
    const IdentityReport r = make_report("duality", "values,k<=6", 3.25e-17L, 8.0e-15L, 42);
    const std::string line = to_json_line(r);
    CHECK(line.find("\"identity\":\"duality\"") != std::string::npos);
    CHECK(line.find("\"pass\":true") != std::string::npos);
    CHECK(line.find('\n') == std::string::npos);

    const IdentityReport back = parse_json_line(line);
    CHECK(back.identity == r.identity);
    CHECK(back.params == r.params);
    CHECK(back.pass == r.pass);
    CHECK(back.wall_ms == r.wall_ms);
    CHECK(back.deviation == Catch::Approx(static_cast<double>(r.deviation)));
    CHECK(back.budget == Catch::Approx(static_cast<double>(r.budget)));
}

TEST_CASE("failing reports serialize as failing") {
    const IdentityReport r = make_report("m2n1", "l<=3", 2.0L, 1.0e-9L, 7);
    CHECK_FALSE(r.pass);
    const std::string line = to_json_line(r);
    CHECK(line.find("\"pass\":false") != std::string::npos);
    CHECK_FALSE(parse_json_line(line).pass);
}

TEST_CASE("reports sort by identity then params") {
    std::vector<IdentityReport> rs;
    rs.push_back(make_report("m2n0", "l<=4", 0.0L, 0.0L, 1));
    rs.push_back(make_report("duality", "values,k<=6", 0.0L, 0.0L, 1));
    rs.push_back(make_report("duality", "tau bijection,k<=6", 0.0L, 0.0L, 1));
    rs.push_back(make_report("bound-half", "weight<=6", 0.0L, 0.0L, 1));
    sort_reports(rs);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].identity == "bound-half");
    CHECK(rs[1].identity == "duality");
    CHECK(rs[1].params == "tau bijection,k<=6");
    CHECK(rs[2].params == "values,k<=6");
    CHECK(rs[3].identity == "m2n0");
}

TEST_CASE("table output lines up and labels failures") {
    std::vector<IdentityReport> rs;
    rs.push_back(make_report("sum-formula", "w<=8,all depths", 4.1e-16L, 2.0e-13L, 120));
    rs.push_back(make_report("m2n1", "l<=5", 3.0L, 1.0e-8L, 15));
    const std::string table = format_table(rs);
    CHECK(table.find("identity") != std::string::npos);
    CHECK(table.find("deviation") != std::string::npos);
    CHECK(table.find("sum-formula") != std::string::npos);
    CHECK(table.find("pass") != std::string::npos);
    CHECK(table.find("FAIL") != std::string::npos);
    // every row has the same width up to the numeric block
    const std::size_t header_end = table.find('\n');
    REQUIRE(header_end != std::string::npos);
    CHECK(table.find("3.000e+00") != std::string::npos);
    CHECK(table.find("4.100e-16") != std::string::npos);
}
