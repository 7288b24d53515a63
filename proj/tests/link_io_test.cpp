#include <doctest.h>

#include <cmath>

#include "seglink/link_engine.hpp"
#include "seglink/link_io.hpp"

using namespace seglink;

TEST_CASE("reads a well-formed link file") {
    const std::string text = R"({
      "components": [
        {"vertices": [[0,0,0],[1,0,0],[0,1,0]], "closed": true},
        {"vertices": [[0,0,1],[1,0,1]], "closed": false}
      ]
    })";
    const PolyLink link = read_link_json(text);
    CHECK(link.comp1.size() == 3);
    CHECK(link.comp2.size() == 2);
    CHECK(link.closed1);
    CHECK(!link.closed2);
    CHECK(link.comp1[1].x == 1.0);
}

TEST_CASE("closed defaults to true") {
    const std::string text = R"({"components":[
        {"vertices":[[0,0,0],[1,0,0]]},
        {"vertices":[[0,0,1],[1,0,1]]}]})";
    const PolyLink link = read_link_json(text);
    CHECK(link.closed1);
    CHECK(link.closed2);
}

TEST_CASE("malformed and schema-violating inputs throw parse_error") {
    CHECK_THROWS_AS(read_link_json("{ not json"), parse_error);
    CHECK_THROWS_AS(read_link_json(""), parse_error);
    CHECK_THROWS_AS(read_link_json(R"({"components": []})"), parse_error);
    CHECK_THROWS_AS(read_link_json(R"({"components": [{"vertices": [[0,0,0],[1,0,0]]}]})"),
                    parse_error);
    CHECK_THROWS_AS(
        read_link_json(
            R"({"components":[{"vertices":[[0,0,0]]},{"vertices":[[0,0,1],[1,0,1]]}]})"),
        parse_error);
    CHECK_THROWS_AS(
        read_link_json(
            R"({"components":[{"vertices":[[0,0],[1,0]]},{"vertices":[[0,0,1],[1,0,1]]}]})"),
        parse_error);
    CHECK_THROWS_AS(
        read_link_json(
            R"({"components":[{"vertices":[[0,0,1e999],[1,0,0]]},{"vertices":[[0,0,1],[1,0,1]]}]})"),
        parse_error);
}

TEST_CASE("write/read round trip preserves the linking number bit for bit") {
    for (const auto& [name, link] : builtin_links()) {
        CAPTURE(name);
        const PolyLink back = read_link_json(write_link_json(link));
        CHECK(lk_link(back).lk_total == lk_link(link).lk_total);
        REQUIRE(back.comp1.size() == link.comp1.size());
        for (std::size_t i = 0; i < link.comp1.size(); ++i) {
            CHECK(back.comp1[i].x == link.comp1[i].x);
            CHECK(back.comp1[i].y == link.comp1[i].y);
            CHECK(back.comp1[i].z == link.comp1[i].z);
        }
    }
}

TEST_CASE("round trip is exact for awkward doubles") {
    PolyLink link;
    link.comp1 = {{0.1, -1.0 / 3.0, 1e-17}, {2.0 / 7.0, 1e17, -0.3}};
    link.closed1 = false;
    link.comp2 = {{-1, -2, 0}, {-1, 2, 0}, {1, 2, 0}, {1, -2, 0}};
    const PolyLink back = read_link_json(write_link_json(link));
    CHECK(back.comp1[0].x == link.comp1[0].x);
    CHECK(back.comp1[0].y == link.comp1[0].y);
    CHECK(back.comp1[0].z == link.comp1[0].z);
    CHECK(back.comp1[1].x == link.comp1[1].x);
    CHECK(back.comp1[1].y == link.comp1[1].y);
}

TEST_CASE("lattice spec parsing") {
    const std::string text = R"({
      "probe": {"a":[0,0,-1], "b":[0,0,1]},
      "cell": [{"a":[-1,1,0], "b":[-1,-1,0]}, {"a":[1,-1,0], "b":[1,1,0]}],
      "directions": [[4.5,0,0],[1.5,0,3]]
    })";
    const LatticeSpec spec = read_lattice_json(text);
    CHECK(spec.probe.a.z == -1.0);
    CHECK(spec.cell.size() == 2);
    CHECK(spec.directions.size() == 2);
    CHECK(spec.directions[0].x == 4.5);

    CHECK_THROWS_AS(read_lattice_json(R"({"probe": {}})"), parse_error);
    CHECK_THROWS_AS(read_lattice_json("[]"), parse_error);
}

TEST_CASE("missing files throw parse_error") {
    CHECK_THROWS_AS(read_link_file("/nonexistent/path.json"), parse_error);
    CHECK_THROWS_AS(read_lattice_file("/nonexistent/path.json"), parse_error);
}
