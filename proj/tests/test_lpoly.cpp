#include <doctest.h>

#include <cstdint>
#include <limits>

#include "motivic/errors.hpp"
#include "motivic/lpoly.hpp"

using motivic::ArithmeticOverflow;
using motivic::LPolynomial;

TEST_CASE("canonical sparse form") {
    CHECK(LPolynomial::zero().is_zero());
    CHECK(LPolynomial::zero().degree() == -1);
    CHECK(LPolynomial::constant(0) == LPolynomial::zero());
    CHECK(LPolynomial::monomial(5, 0) == LPolynomial::zero());
    CHECK(LPolynomial::from_coefficients({{3, 0}, {1, 2}}).coefficients().size() == 1);

    const LPolynomial p = LPolynomial::projective(2);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(7) == 0);
}

TEST_CASE("constructors match the geometric classes") {
    CHECK(LPolynomial::affine(0) == LPolynomial::one());
    CHECK(LPolynomial::affine(2).to_string() == "L^2");
    CHECK(LPolynomial::projective(0) == LPolynomial::one());
    CHECK(LPolynomial::projective(1).to_string() == "L + 1");
    CHECK(LPolynomial::projective(3).to_string() == "L^3 + L^2 + L + 1");
}

TEST_CASE("arithmetic") {
    const LPolynomial p1 = LPolynomial::projective(1);
    CHECK((p1 + LPolynomial::lefschetz()).to_string() == "2*L + 1");
    CHECK((p1 * p1).to_string() == "L^2 + 2*L + 1");
    CHECK(p1 * LPolynomial::one() == p1);
    CHECK((LPolynomial::projective(2) * LPolynomial::lefschetz()).to_string() ==
          "L^3 + L^2 + L");
    CHECK((p1 - p1).is_zero());
    CHECK((-p1).to_string() == "-L - 1");
    CHECK(p1.scaled(3).to_string() == "3*L + 3");
    CHECK(p1.scaled(0).is_zero());
}

TEST_CASE("evaluation is exact and guarded") {
    CHECK(LPolynomial::projective(3).eval(3) == 40);
    CHECK(LPolynomial::projective(3).eval(2) == 15);
    CHECK(LPolynomial::zero().eval(5) == 0);
    CHECK(LPolynomial::from_coefficients({{3, 1}, {2, 2}, {1, 2}, {0, 1}}).eval(2) == 21);
    CHECK_THROWS_AS((void)LPolynomial::one().eval(1), std::invalid_argument);

    // homomorphism spot checks
    const LPolynomial a = LPolynomial::from_coefficients({{2, 3}, {0, -4}});
    const LPolynomial b = LPolynomial::from_coefficients({{1, 7}, {0, 5}});
    for (std::int64_t q : {2, 3, 5}) {
        CHECK((a + b).eval(q) == a.eval(q) + b.eval(q));
        CHECK((a * b).eval(q) == a.eval(q) * b.eval(q));
    }
}

TEST_CASE("mod-L and divide-by-L") {
    const LPolynomial p = LPolynomial::from_coefficients({{3, 1}, {1, 9}, {0, 4}});
    CHECK(p.mod_l() == LPolynomial::constant(4));
    CHECK(LPolynomial::lefschetz().mod_l().is_zero());
    CHECK_FALSE(p.div_l().has_value());

    const LPolynomial divisible = LPolynomial::from_coefficients({{2, 8}, {1, 8}});
    REQUIRE(divisible.div_l().has_value());
    CHECK(divisible.div_l()->to_string() == "8*L + 8");
    CHECK(LPolynomial::zero().div_l()->is_zero());
    CHECK(*(LPolynomial::lefschetz() * p).div_l() == p);
}

TEST_CASE("printing uses descending powers with explicit signs") {
    CHECK(LPolynomial::zero().to_string() == "0");
    CHECK(LPolynomial::constant(-7).to_string() == "-7");
    CHECK(LPolynomial::from_coefficients({{3, 1}, {2, 9}, {1, 9}, {0, 1}}).to_string() ==
          "L^3 + 9*L^2 + 9*L + 1");
    CHECK(LPolynomial::from_coefficients({{1, 73}, {0, -83}}).to_string() == "73*L - 83");
    CHECK(LPolynomial::from_coefficients({{2, -1}, {0, 2}}).to_string() == "-L^2 + 2");
    CHECK(LPolynomial::constant(std::numeric_limits<std::int64_t>::min()).to_string() ==
          "-9223372036854775808");
}

TEST_CASE("overflow is detected, never wrapped") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    const LPolynomial huge = LPolynomial::constant(big);
    CHECK_THROWS_AS(huge + LPolynomial::one(), ArithmeticOverflow);
    CHECK_THROWS_AS(huge * LPolynomial::constant(2), ArithmeticOverflow);
    CHECK_THROWS_AS(huge.scaled(-2), ArithmeticOverflow);
    CHECK_THROWS_AS((void)LPolynomial::monomial(63, 1).eval(3), ArithmeticOverflow);
}
