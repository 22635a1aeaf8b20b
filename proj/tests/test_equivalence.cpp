#include <doctest.h>

#include "motivic/equivalence.hpp"
#include "motivic/normalize.hpp"

using namespace motivic;

namespace {

MotivicClass poly_class(std::map<std::int64_t, std::int64_t> coeffs) {
    return MotivicClass::from_lpoly(LPolynomial::from_coefficients(coeffs));
}

}  // namespace

TEST_CASE("L-equivalence is exact equality in this ring") {
    const MotivicClass p1 = poly_class({{1, 1}, {0, 1}});
    CHECK(l_equivalent(p1, p1).verdict);
    CHECK(l_equivalent(p1, MotivicClass::lefschetz() + MotivicClass::one()).verdict);

    const EquivalenceReport r = l_equivalent(p1, MotivicClass::lefschetz());
    CHECK_FALSE(r.verdict);
    CHECK(r.difference == MotivicClass::one());
    REQUIRE(r.note.has_value());
    CHECK(r.note->find("injective") != std::string::npos);

    // classes of the same blow-up built from different configurations
    const MotivicClass a = normalize_or_throw(blow_up(projective(3), scale(8, point()), 3));
    const MotivicClass b = normalize_or_throw(blow_up(projective(3), scale(8, point()), 3));
    CHECK(l_equivalent(a, b).verdict);
    CHECK(l_equivalent(a, b).difference.is_zero());
}

TEST_CASE("difference is reported with a positive leading coefficient") {
    const MotivicClass p1 = poly_class({{1, 1}, {0, 1}});
    const MotivicClass p2 = poly_class({{2, 1}, {1, 1}, {0, 1}});
    CHECK(l_equivalent(p1, p2).difference.to_string() == "L^2");
    CHECK(l_equivalent(p2, p1).difference.to_string() == "L^2");
    const MotivicClass c = MotivicClass::from_atom("C");
    CHECK(l_equivalent(p1, p1 + c).difference.to_string() == "C");
    CHECK(l_equivalent(p1 + c, p1).difference.to_string() == "C");
}

TEST_CASE("stable birational class keeps constant terms only") {
    CHECK(stable_birational_class(poly_class({{3, 1}, {2, 9}, {1, 9}, {0, 1}})) ==
          MotivicClass::one());
    for (std::int64_t n = 0; n <= 10; ++n) {
        CHECK(stable_birational_class(MotivicClass::from_lpoly(LPolynomial::projective(n))) ==
              MotivicClass::one());
    }
    const MotivicClass mixed =
        MotivicClass::constant(3) + MotivicClass::lefschetz() * MotivicClass::from_atom("C");
    CHECK(stable_birational_class(mixed) == MotivicClass::constant(3));

    // multiplicativity spot check
    const MotivicClass a = poly_class({{1, 4}, {0, 3}});
    const MotivicClass b = poly_class({{2, 1}, {0, -2}}) + MotivicClass::from_atom("D");
    CHECK(stable_birational_class(a * b) ==
          stable_birational_class(a) * stable_birational_class(b));
}

TEST_CASE("rationality witness") {
    const MotivicClass eight = poly_class({{3, 1}, {2, 9}, {1, 9}, {0, 1}});
    const auto w = rationality_witness(eight, 3);
    REQUIRE(w.has_value());
    CHECK(*w == poly_class({{1, 8}, {0, 8}}));
    // reconstruction is exact
    CHECK(MotivicClass::from_lpoly(LPolynomial::projective(3)) +
              MotivicClass::lefschetz() * *w ==
          eight);

    const MotivicClass p4 = MotivicClass::from_lpoly(LPolynomial::projective(4));
    REQUIRE(rationality_witness(p4, 4).has_value());
    CHECK(rationality_witness(p4, 4)->is_zero());

    CHECK_FALSE(rationality_witness(poly_class({{1, 1}, {0, 2}}), 1).has_value());
}

TEST_CASE("birational difference witness") {
    const MotivicClass one_pt = poly_class({{3, 1}, {2, 2}, {1, 2}, {0, 1}});
    const MotivicClass p3 = MotivicClass::from_lpoly(LPolynomial::projective(3));
    const auto m = birational_difference(one_pt, p3);
    REQUIRE(m.has_value());
    CHECK(*m == poly_class({{1, 1}, {0, 1}}));
    CHECK(birational_difference(p3, p3)->is_zero());
    CHECK_FALSE(
        birational_difference(poly_class({{1, 1}, {0, 1}}), MotivicClass::lefschetz()).has_value());
    // matches the rationality witness against [P^3]
    CHECK(*birational_difference(poly_class({{3, 1}, {2, 9}, {1, 9}, {0, 1}}), p3) ==
          *rationality_witness(poly_class({{3, 1}, {2, 9}, {1, 9}, {0, 1}}), 3));
}

TEST_CASE("projective combination shapes") {
    const auto eightp1 = projective_combination(poly_class({{1, 8}, {0, 8}}), 1);
    REQUIRE(eightp1.has_value());
    CHECK(eightp1->to_string() == "8*[P^1]");

    const auto mixed = projective_combination(poly_class({{2, 1}, {1, 1}, {0, 4}}), 2);
    REQUIRE(mixed.has_value());
    CHECK(mixed->to_string() == "[P^2] + 3*[P^0]");

    CHECK(projective_combination(MotivicClass::zero(), 0)->to_string() == "0");
    // too high a degree, a negative peel, or atoms all fail
    CHECK_FALSE(projective_combination(poly_class({{2, 1}, {1, 1}, {0, 1}}), 1).has_value());
    CHECK_FALSE(projective_combination(poly_class({{1, 1}}), 1).has_value());
    CHECK_FALSE(projective_combination(MotivicClass::from_atom("C"), 3).has_value());
}
