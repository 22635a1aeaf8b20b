#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "motivic/errors.hpp"
#include "motivic/json_io.hpp"
#include "motivic/normalize.hpp"
#include "test_util.hpp"

using namespace motivic;
using nlohmann::json;

TEST_CASE("polynomial JSON form") {
    const auto p3 = lpoly_to_json(LPolynomial::projective(3));
    CHECK(p3 == json::parse(R"([{"deg":3,"c":1},{"deg":2,"c":1},{"deg":1,"c":1},{"deg":0,"c":1}])"));
    CHECK(lpoly_to_json(LPolynomial::zero()) == json::array());
    CHECK(lpoly_to_json(LPolynomial::from_coefficients({{1, 73}, {0, -83}})) ==
          json::parse(R"([{"deg":1,"c":73},{"deg":0,"c":-83}])"));
}

TEST_CASE("class JSON round trip") {
    const MotivicClass cls =
        MotivicClass::from_lpoly(LPolynomial::from_coefficients({{1, 8}, {0, 8}})) +
        MotivicClass::lefschetz() * MotivicClass::from_atom("C");
    const auto j = class_to_json(cls);
    REQUIRE(j.contains("terms"));
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["atoms"] == json::array());
    CHECK(j["terms"][1]["atoms"] == json::parse(R"([{"name":"C","exp":1}])"));
    CHECK(class_from_json(j) == cls);

    CHECK(class_from_json(class_to_json(MotivicClass::zero())) == MotivicClass::zero());

    // arbitrary term and degree order, split terms, and zero coefficients all canonicalize
    const auto scrambled = json::parse(R"({"terms": [
        {"atoms": [{"name":"C","exp":1}], "coeffs": [{"deg":0,"c":0},{"deg":1,"c":1}]},
        {"atoms": [], "coeffs": [{"deg":0,"c":8},{"deg":1,"c":5}]},
        {"atoms": [], "coeffs": [{"deg":1,"c":3}]}
    ]})");
    CHECK(class_from_json(scrambled) == cls);

    testutil::Rng rng(77);
    for (int i = 0; i < 100; ++i) {
        const auto c = testutil::random_class(rng);
        CHECK(class_from_json(class_to_json(c)) == c);
    }
}

TEST_CASE("malformed class JSON is rejected") {
    for (const char* text : {
             R"(42)",
             R"({"terms": 3})",
             R"({"terms": [{"coeffs": []}]})",
             R"({"terms": [{"atoms": [], "coeffs": [{"deg": 1}]}]})",
             R"({"terms": [{"atoms": [{"name":"C","exp":0}], "coeffs": []}]})",
             R"({"terms": [{"atoms": [{"name":"","exp":1}], "coeffs": []}]})",
             R"({"terms": [{"atoms": [], "coeffs": [{"deg":-1,"c":2}]}]})",
             R"({"terms": [{"atoms": [], "coeffs": [{"deg":1.5,"c":2}]}]})",
         }) {
        CAPTURE(text);
        CHECK_THROWS_AS(class_from_json(json::parse(text)), std::invalid_argument);
    }
}

TEST_CASE("report and sample JSON") {
    const auto rep = l_equivalent(normalize_or_throw(projective(1)),
                                  MotivicClass::from_lpoly(LPolynomial::projective(1)));
    const auto j = report_to_json(rep);
    CHECK(j["verdict"] == true);
    CHECK(j["difference"] == "0");
    CHECK(j["difference_class"] == class_to_json(MotivicClass::zero()));
    CHECK(j.contains("note"));

    CHECK(sample_to_json({2, 63}) == json::parse(R"({"q":2,"count":63})"));
}

TEST_CASE("counting problems from JSON") {
    const auto j = json::parse(R"({
        "ambient": {"type": "multi_projective", "dims": [3, 2]},
        "equations": ["x1*y1 - x2*y0", "x1*y2 - x3*y0", "x2*y2 - x3*y1"],
        "p": 2
    })");
    const auto problem = problem_from_json(j);
    CHECK(problem.field.p == 2);
    REQUIRE(problem.equations.size() == 3);
    CHECK(count_points(problem).count == 21);

    const auto affine_j = json::parse(R"({
        "ambient": {"type": "affine", "dim": 2},
        "equations": ["x0*x1 - 1"],
        "p": 5
    })");
    CHECK(count_points(problem_from_json(affine_j)).count == 4);

    const auto proj_j = json::parse(R"({
        "ambient": {"type": "projective", "dim": 2},
        "equations": [],
        "p": 3
    })");
    CHECK(count_points(problem_from_json(proj_j)).count == 13);

    for (const char* text : {
             R"({"equations": [], "p": 2})",
             R"({"ambient": {"type": "weird", "dim": 1}, "equations": [], "p": 2})",
             R"({"ambient": {"type": "affine"}, "equations": [], "p": 2})",
             R"({"ambient": {"type": "affine", "dim": 1}, "equations": [], "p": 4})",
             R"({"ambient": {"type": "affine", "dim": 1}, "equations": "x0", "p": 2})",
         }) {
        CAPTURE(text);
        CHECK_THROWS_AS(problem_from_json(json::parse(text)), std::invalid_argument);
    }
    CHECK_THROWS_AS(problem_from_json(json::parse(
                        R"({"ambient": {"type": "affine", "dim": 1},
                            "equations": ["x9"], "p": 2})")),
                    ParseError);
}

TEST_CASE("problem files load from disk") {
    const std::string path = "test_problem_tmp.json";
    {
        std::ofstream out(path);
        out << R"({"ambient": {"type": "multi_projective", "dims": [3, 2]},
                   "equations": ["x1*y1 - x2*y0", "x1*y2 - x3*y0", "x2*y2 - x3*y1"],
                   "p": 3})";
    }
    CHECK(count_points(load_problem_file(path)).count == 52);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_problem_file("does_not_exist.json"), std::invalid_argument);
    {
        std::ofstream out(path);
        out << "{not json";
    }
    CHECK_THROWS_AS(load_problem_file(path), std::invalid_argument);
    std::remove(path.c_str());
}
