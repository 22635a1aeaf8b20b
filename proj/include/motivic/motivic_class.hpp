#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/lpoly.hpp"

namespace motivic {

/// Product of formal atom generators with positive exponents, kept sorted by
/// name. The empty monomial is the multiplicative unit.
class AtomMonomial {
public:
    AtomMonomial() = default;

    static AtomMonomial unit() { return AtomMonomial(); }
    static AtomMonomial atom(const std::string& name);

    bool is_unit() const { return factors_.empty(); }
    const std::vector<std::pair<std::string, std::int64_t>>& factors() const { return factors_; }

    AtomMonomial operator*(const AtomMonomial& rhs) const;

    bool operator==(const AtomMonomial& rhs) const = default;
    // lexicographic by (name, exponent) sequence; the unit sorts first
    bool operator<(const AtomMonomial& rhs) const { return factors_ < rhs.factors_; }

    /// "C", "C^2", "C*D^3"; the unit prints as "1".
    std::string to_string() const;

private:
    std::vector<std::pair<std::string, std::int64_t>> factors_;
};

/// Element of the modeled subring Z[L][atoms] of the Grothendieck ring of
/// varieties: a finite sum of atom monomials with LPolynomial coefficients.
/// Canonical form stores no zero coefficient polynomial, so equality of
/// classes is structural equality.
class MotivicClass {
public:
    MotivicClass() = default;

    static MotivicClass zero() { return MotivicClass(); }
    static MotivicClass one() { return from_lpoly(LPolynomial::one()); }
    static MotivicClass lefschetz() { return from_lpoly(LPolynomial::lefschetz()); }
    static MotivicClass constant(std::int64_t c) { return from_lpoly(LPolynomial::constant(c)); }
    static MotivicClass from_lpoly(const LPolynomial& p);
    static MotivicClass from_atom(const std::string& name);
    static MotivicClass from_term(const AtomMonomial& monomial, const LPolynomial& coeff);

    bool is_zero() const { return terms_.empty(); }
    /// True when the only monomial present is the unit.
    bool is_atom_free() const;
    /// The underlying LPolynomial when atom-free, nullopt otherwise.
    std::optional<LPolynomial> as_lpoly() const;
    const std::map<AtomMonomial, LPolynomial>& terms() const { return terms_; }
    LPolynomial coeff(const AtomMonomial& monomial) const;

    MotivicClass operator+(const MotivicClass& rhs) const;
    MotivicClass operator-(const MotivicClass& rhs) const;
    MotivicClass operator*(const MotivicClass& rhs) const;
    MotivicClass operator-() const;
    MotivicClass scaled(std::int64_t k) const;

    /// Ring homomorphism setting L = 0: keeps constant terms of every coefficient.
    MotivicClass mod_l() const;

    /// The class m with *this == L * m, when every coefficient is divisible by L.
    std::optional<MotivicClass> div_l() const;

    bool operator==(const MotivicClass& rhs) const = default;

    /// Canonical text form: unit term first, then atom terms in monomial
    /// order, e.g. "L^3 + 9*L^2 + 9*L + 1" or "8*L + L*C" or "(L + 1)*C".
    std::string to_string() const;

private:
    void add_term(const AtomMonomial& m, const LPolynomial& p);

    // monomial -> coefficient polynomial, no zero values stored
    std::map<AtomMonomial, LPolynomial> terms_;
};

}  // namespace motivic
