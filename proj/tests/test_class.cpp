#include <doctest.h>

#include "motivic/motivic_class.hpp"

using motivic::AtomMonomial;
using motivic::LPolynomial;
using motivic::MotivicClass;

namespace {

const AtomMonomial kC = AtomMonomial::atom("C");
const AtomMonomial kD = AtomMonomial::atom("D");

}  // namespace

TEST_CASE("atom monomials multiply by exponent addition and sort by name") {
    CHECK(AtomMonomial::unit().is_unit());
    CHECK((kC * kC).to_string() == "C^2");
    CHECK((kD * kC * kD).to_string() == "C*D^2");
    CHECK(AtomMonomial::unit().to_string() == "1");
    CHECK(AtomMonomial::unit() < kC);
    CHECK(kC < kD);
    CHECK(kC < kC * kC);
}

TEST_CASE("class arithmetic embeds polynomial arithmetic when atom-free") {
    const MotivicClass p1 = MotivicClass::from_lpoly(LPolynomial::projective(1));
    CHECK((p1 * p1).to_string() == "L^2 + 2*L + 1");
    CHECK(p1.is_atom_free());
    CHECK(p1.as_lpoly() == LPolynomial::projective(1));
    CHECK(MotivicClass::one() * p1 == p1);
    CHECK((p1 - p1).is_zero());
}

TEST_CASE("atom terms distribute and cancel") {
    const MotivicClass c = MotivicClass::from_atom("C");
    const MotivicClass p1 = MotivicClass::from_lpoly(LPolynomial::projective(1));
    const MotivicClass l = MotivicClass::lefschetz();
    // C*(1+L) - C*L = C
    CHECK(c * p1 - c * l == c);
    CHECK_FALSE((c + p1).is_atom_free());
    CHECK_FALSE((c + p1).as_lpoly().has_value());
    CHECK((c * c).coeff(kC * kC) == LPolynomial::one());
    CHECK(c.coeff(kD).is_zero());
    CHECK(c.scaled(0).is_zero());
}

TEST_CASE("mod-L and divide-by-L act coefficient-wise") {
    const MotivicClass c = MotivicClass::from_atom("C");
    const MotivicClass mixed =
        c * MotivicClass::from_lpoly(LPolynomial::from_coefficients({{1, 5}, {0, 3}}));
    CHECK(mixed.mod_l() == c.scaled(3));
    CHECK(MotivicClass::lefschetz().mod_l().is_zero());

    const MotivicClass divisible = MotivicClass::lefschetz() * (c + MotivicClass::constant(2));
    REQUIRE(divisible.div_l().has_value());
    CHECK(*divisible.div_l() == c + MotivicClass::constant(2));
    CHECK_FALSE((c + MotivicClass::one()).div_l().has_value());
    CHECK(MotivicClass::zero().div_l()->is_zero());
}

TEST_CASE("canonical text form") {
    CHECK(MotivicClass::zero().to_string() == "0");
    CHECK(MotivicClass::one().to_string() == "1");
    const MotivicClass c = MotivicClass::from_atom("C");
    const MotivicClass l = MotivicClass::lefschetz();

    CHECK((MotivicClass::from_lpoly(LPolynomial::monomial(1, 8)) + l * c).to_string() ==
          "8*L + L*C");
    CHECK(MotivicClass::from_term(kC, LPolynomial::projective(1)).to_string() == "(L + 1)*C");
    CHECK(c.scaled(-3).to_string() == "-3*C");
    CHECK((MotivicClass::one() - c).to_string() == "1 - C");
    CHECK(MotivicClass::from_lpoly(LPolynomial::from_coefficients({{3, 1}, {2, 9}, {1, 9}, {0, 1}}))
              .to_string() == "L^3 + 9*L^2 + 9*L + 1");
}

TEST_CASE("fixed ring-law spot checks") {
    const MotivicClass a = MotivicClass::from_atom("C") + MotivicClass::lefschetz();
    const MotivicClass b = MotivicClass::from_atom("D").scaled(2) - MotivicClass::one();
    const MotivicClass c = MotivicClass::from_lpoly(LPolynomial::projective(2));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + (-a)).is_zero());
}
