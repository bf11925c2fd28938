#include <doctest.h>

#include "sharkovsky/error.hpp"
#include "sharkovsky/io.hpp"
#include "sharkovsky/kernel.hpp"
#include "support.hpp"

using namespace sharkovsky;
using testing_support::kFixtures;

TEST_SUITE("io") {
  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("2.5") == Rational(5, 2));
    CHECK(parse_rational("-1e-2") == Rational(-1, 100));
    CHECK(parse_rational("1.25E1") == Rational(25, 2));
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(parse_rational("0.0625") == Rational(1, 16));
    CHECK(to_string(Rational(4)) == "4");
    CHECK(to_string(0.1) == "0.10000000000000001");
    for (const char* bad : {"", "abc", "1/0", "1/", "2..5"}) {
      try {
        parse_rational(bad);
        FAIL("accepted '", bad, "'");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kParse);
      }
    }
  }

  TEST_CASE("permutation json") {
    const auto pi = permutation_from_json(read_json_file(kFixtures + "/pi8.json"));
    CHECK(pi.images() == std::vector<int>{8, 4, 2, 7, 3, 5, 1, 6});
    CHECK(permutation_from_json(to_json(pi)) == pi);
    CHECK_THROWS_AS(permutation_from_json(json{{"n", 3}, {"images", {1, 2}}}), Error);
    CHECK_THROWS_AS(permutation_from_json(json{{"n", 2}, {"images", {1, 2}}}), Error);
    CHECK_THROWS_AS(read_json_file(kFixtures + "/missing.json"), Error);
  }

  TEST_CASE("map json") {
    const auto pl = map_from_json(read_json_file(kFixtures + "/pl_pi4.json"));
    REQUIRE(pl.is_exact());
    CHECK(pl.exact() == connect_the_dots(validate({4, 3, 1, 2})));
    CHECK(map_from_json(to_json(pl.exact())).exact() == pl.exact());
    CHECK(pl.domain().lo == 1.0);
    CHECK(pl.real()(2.5) == doctest::Approx(2.0));

    const auto poly = map_from_json(read_json_file(kFixtures + "/quadratic.json"));
    CHECK_FALSE(poly.is_exact());
    CHECK(poly.real()(2.0) == doctest::Approx(3.0));
    CHECK(poly.domain().hi == 3.7);
    CHECK_THROWS_AS(poly.exact(), Error);

    const auto table = map_from_json(json{{"kind", "table"}, {"xs", {0, 1, 2}}, {"ys", {0, 2, 0}}});
    CHECK(table.real()(0.5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(map_from_json(json{{"kind", "spline"}}), Error);
  }

  TEST_CASE("orbit points") {
    const auto j = read_json_file(kFixtures + "/quadratic_orbit.json");
    CHECK(exact_points_from_json(j) == std::vector<Rational>{1, 2, 3});
    CHECK(float_points_from_json(j) == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(exact_points_from_json(json{{"points", {"1/3", "0.5"}}}) == std::vector<Rational>{Rational(1, 3), Rational(1, 2)});
  }

  TEST_CASE("report serialization") {
    const ExactKernel f(connect_the_dots(validate({4, 3, 1, 2})));
    const auto report = verify_forcing(f, orbit_to_permutation(f, f.map().xs()), 5);
    const auto j = to_json(report);
    CHECK(j["source_period"] == 4);
    CHECK(j["cap"] == 5);
    CHECK(j["mode"] == "exact");
    REQUIRE(j["entries"].size() == 5);
    const auto& first = j["entries"][0];
    for (const char* key : {"period", "status", "construction", "point", "residual", "least_period", "map_power", "loop_length"}) {
      CHECK_MESSAGE(first.contains(key), key);
    }
    CHECK(first["point"] == "7/3");
    CHECK(j["entries"][2]["status"] == "not_forced");
    CHECK_FALSE(j["entries"][2].contains("point"));

    const auto csv = to_csv(report);
    CHECK(csv.rfind("period,point,residual,construction\n", 0) == 0);
    CHECK(csv.find("1,7/3,0,fixed_point\n") != std::string::npos);
    CHECK(csv.find("2,7/2,0,lemma2_period2\n") != std::string::npos);

    const auto plan = to_json(loop_for_period(validate({2, 3, 1}), 5));
    CHECK(plan["length"] == 5);
    CHECK(plan["segments"].size() == 5);
    CHECK(plan["interpretation"] == "f");
  }
}
