#include <doctest.h>

#include <random>
#include <sstream>

#include "mudom/json_io.hpp"

using namespace mudom;

TEST_CASE("complex round trip is bit exact") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int t = 0; t < 100; ++t) {
        Complex z{u(rng), u(rng)};
        auto j = complex_to_json(z);
        CHECK(json_to_complex(j) == z);
        // serialized form is the two-element array, never a string
        CHECK(j.is_array());
        CHECK(j.size() == 2);
    }
    CHECK_THROWS_AS(json_to_complex(json::parse("\"1+2i\"")),
                    std::invalid_argument);
    CHECK_THROWS_AS(json_to_complex(json::parse("[1,2,3]")),
                    std::invalid_argument);
}

TEST_CASE("point and matrix round trips") {
    CPoint x = {Complex{0.5, -0.25}, Complex{0, 1}, Complex{3, 0}};
    CHECK(json_to_point(point_to_json(x)) == x);

    CMatrix A(2);
    A.at(0, 0) = {1, 2};
    A.at(0, 1) = {-0.5, 0};
    A.at(1, 0) = {0, -1};
    A.at(1, 1) = {4, 4};
    auto B = json_to_matrix(matrix_to_json(A));
    CHECK(B.entries == A.entries);

    CHECK_THROWS_AS(json_to_matrix(json::parse("[[ [1,0] ],[ [0,0],[0,0] ]]")),
                    std::invalid_argument);
}

TEST_CASE("membership serialization") {
    MembershipResult r;
    r.status = Membership::Boundary;
    r.method = MemberMethod::PsiRecursive;
    r.margin = 1e-8;
    auto j = membership_to_json(r);
    CHECK(j["status"] == "Boundary");
    CHECK(j["method"] == "PsiRecursive");
    CHECK(membership_from_name(j["status"].get<std::string>()) ==
          Membership::Boundary);
    CHECK_THROWS_AS(membership_from_name("inside"), std::invalid_argument);
}

TEST_CASE("report envelope carries schema and echoes inputs") {
    auto j = report_envelope("member", json{{"blocks", {2}}},
                             json{{"status", "Inside"}});
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["subcommand"] == "member");
    CHECK(j["inputs"]["blocks"][0] == 2);
    // round trip through text
    auto k = json::parse(j.dump());
    CHECK(k == j);
}

TEST_CASE("table serialization matches the build") {
    auto t = build_table({2, 1});
    auto j = table_to_json(t);
    CHECK(j["N"] == 5);
    CHECK(j["alphas"][0] == json::parse("[1,0]"));
    CHECK(j["alphas"][4] == json::parse("[2,1]"));
}

TEST_CASE("section CSV shape") {
    SectionMap map;
    map.resolution = 2;
    map.window = {0, 1, 0, 1};
    map.grid = {1, 0, 0, 1};
    std::ostringstream os;
    write_section_csv(map, os);
    std::istringstream is(os.str());
    std::string line;
    int lines = 0;
    while (std::getline(is, line)) ++lines;
    CHECK(lines == 5);  // header + 4 cells
}
