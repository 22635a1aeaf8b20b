#include <doctest.h>

#include "motivic/normalize.hpp"

using namespace motivic;

namespace {

MotivicClass poly_class(std::map<std::int64_t, std::int64_t> coeffs) {
    return MotivicClass::from_lpoly(LPolynomial::from_coefficients(coeffs));
}

}  // namespace

TEST_CASE("leaves") {
    CHECK(normalize_or_throw(empty_space()).is_zero());
    CHECK(normalize_or_throw(point()) == MotivicClass::one());
    CHECK(normalize_or_throw(affine(2)) == poly_class({{2, 1}}));
    CHECK(normalize_or_throw(projective(2)) == poly_class({{2, 1}, {1, 1}, {0, 1}}));
    CHECK(normalize_or_throw(atom("C")) == MotivicClass::from_atom("C"));
    CHECK(normalize_or_throw(atom("C", 2)) == MotivicClass::from_atom("C"));
}

TEST_CASE("compound constructions") {
    CHECK(normalize_or_throw(product(projective(1), projective(1))) ==
          poly_class({{2, 1}, {1, 2}, {0, 1}}));
    CHECK(normalize_or_throw(fibration(projective(1), projective(1))) ==
          poly_class({{2, 1}, {1, 2}, {0, 1}}));
    CHECK(normalize_or_throw(disjoint({affine(1), point()})) == poly_class({{1, 1}, {0, 1}}));
    CHECK(normalize_or_throw(complement(projective(2), projective(1))) == poly_class({{2, 1}}));
    CHECK(normalize_or_throw(scale(5, point())) == MotivicClass::constant(5));
}

TEST_CASE("blow-up rewriting") {
    // one point in P^3: the value the equation-based oracle confirms
    CHECK(normalize_or_throw(blow_up(projective(3), point(), 3)) ==
          poly_class({{3, 1}, {2, 2}, {1, 2}, {0, 1}}));
    // eight points in P^3
    CHECK(normalize_or_throw(blow_up(projective(3), scale(8, point()), 3)) ==
          poly_class({{3, 1}, {2, 9}, {1, 9}, {0, 1}}));
    // blowing up along a divisor (codim 1) changes nothing
    const ExprPtr y = product(projective(2), affine(1));
    CHECK(normalize_or_throw(blow_up(y, projective(1), 1)) == normalize_or_throw(y));
    // atoms pass through the same formula: Bl_C P^3 with codim 2
    const MotivicClass expected =
        poly_class({{3, 1}, {2, 1}, {1, 1}, {0, 1}}) +
        MotivicClass::lefschetz() * MotivicClass::from_atom("C");
    CHECK(normalize_or_throw(blow_up(projective(3), atom("C"), 2)) == expected);
}

TEST_CASE("scissor and homomorphism identities on fixed inputs") {
    const ExprPtr x = projective(3);
    const ExprPtr z = scale(2, projective(1));
    CHECK(normalize_or_throw(complement(x, z)) + normalize_or_throw(z) == normalize_or_throw(x));
    CHECK(normalize_or_throw(product(x, z)) ==
          normalize_or_throw(x) * normalize_or_throw(z));
    CHECK(normalize_or_throw(disjoint({x, z})) ==
          normalize_or_throw(x) + normalize_or_throw(z));
}

TEST_CASE("normalize is deterministic and pure") {
    const ExprPtr e = blow_up(projective(3), scale(8, point()), 3);
    CHECK(normalize_or_throw(e) == normalize_or_throw(e));
}

TEST_CASE("invalid inputs produce a diagnostic outcome, not a class") {
    const NormalizeOutcome bad = normalize(scale(0, point()));
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.failure.has_value());
    CHECK_FALSE(bad.failure->message.empty());
    CHECK_FALSE(bad.failure->where.empty());
    CHECK_THROWS_AS(normalize_or_throw(scale(0, point())), std::invalid_argument);

    const NormalizeOutcome good = normalize(point());
    CHECK(good.ok());
    CHECK_FALSE(good.failure.has_value());
}
