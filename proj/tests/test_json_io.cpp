#include "support.hpp"

#include "s3rec/error.hpp"
#include "s3rec/json_io.hpp"

#include <doctest.h>

using namespace s3rec;
using namespace s3rec::report;

TEST_CASE("integers beyond 64 bits travel as strings")
{
    Integer big = Integer(1) << 70;
    auto j = integer(big);
    CHECK(j.is_string());
    CHECK(to_integer(j) == big);
    CHECK(integer(Integer(-5)).is_number_integer());
    CHECK(to_integer(json(-5)) == -5);
    CHECK_THROWS_AS(to_integer(json("12a")), Error);
    CHECK_THROWS_AS(to_integer(json(1.5)), Error);
}

TEST_CASE("recognition report round trip")
{
    for (const auto& name : {"s3_boundary4simplex.tri", "lens_3_1.tri", "one_tet_open.tri"}) {
        CAPTURE(name);
        auto t = testing::load3(name);
        auto r = recognize(t);
        auto j = recognize_report(r);
        CHECK(j["schema"] == kSchema);
        auto back = recognition_from_json(json::parse(j.dump()));
        CHECK(recognize_report(back) == j);
        CHECK(verify_certificate(t, back).ok);
    }
}

TEST_CASE("schema checks")
{
    CHECK_THROWS_AS(require_schema(json::parse(R"({"command":"check"})")), Error);
    CHECK_THROWS_AS(require_schema(json::parse(R"({"schema":"s3rec-report/0","command":"check"})")), Error);
    CHECK_THROWS_AS(require_schema(json::parse(R"({"schema":"s3rec-report/1","command":"launch"})")), Error);
    CHECK_NOTHROW(require_schema(json::parse(R"({"schema":"s3rec-report/1","command":"check"})")));
    auto j = recognize_report(recognize(testing::load3("lens_3_1.tri")));
    j.erase("family");
    CHECK_THROWS_AS(recognition_from_json(j), Error);
}

TEST_CASE("homology report")
{
    auto j = homology_report(testing::load3("lens_3_1.tri"));
    CHECK(j["groups"][1]["torsion"] == json::array({3}));
    CHECK(j["groups"][1]["rank"] == 0);
    CHECK(j["sphere_homology"] == false);
    auto s = homology_report(testing::load2("tetrahedron_boundary.tri"));
    CHECK(s["groups"][2]["rank"] == 1);
    CHECK(homology_from_json(j["groups"]).groups[1].torsion == std::vector<Integer>{3});
}

TEST_CASE("text rendering")
{
    auto text = render_text(check_report(testing::load3("one_tet_open.tri")));
    CHECK(text.find("BoundaryFace") != std::string::npos);
    auto rec = render_text(recognize_report(recognize(testing::load3("lens_3_1.tri"))));
    CHECK(rec.find("verdict: NoSphere") == 0);
}
