#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace motivic {

/// Univariate polynomial in the Lefschetz class L with exact 64-bit integer
/// coefficients. Stored sparse and canonical: no zero coefficient is ever
/// kept, the zero polynomial is the empty map.
class LPolynomial {
public:
    LPolynomial() = default;

    static LPolynomial zero() { return LPolynomial(); }
    static LPolynomial constant(std::int64_t c) { return monomial(0, c); }
    static LPolynomial one() { return constant(1); }
    /// L itself, the class of the affine line.
    static LPolynomial lefschetz() { return monomial(1, 1); }
    static LPolynomial monomial(std::int64_t degree, std::int64_t coeff);
    /// L^n, the class of affine n-space.
    static LPolynomial affine(std::int64_t n) { return monomial(n, 1); }
    /// 1 + L + ... + L^n, the class of projective n-space.
    static LPolynomial projective(std::int64_t n);

    bool is_zero() const { return coeffs_.empty(); }
    /// Max stored degree; -1 for the zero polynomial.
    std::int64_t degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    std::int64_t coeff(std::int64_t degree) const;
    std::int64_t constant_term() const { return coeff(0); }
    bool is_constant() const { return degree() <= 0; }

    LPolynomial operator+(const LPolynomial& rhs) const;
    LPolynomial operator-(const LPolynomial& rhs) const;
    LPolynomial operator*(const LPolynomial& rhs) const;
    LPolynomial operator-() const;
    LPolynomial scaled(std::int64_t k) const;

    /// Exact value at an integer point q >= 2.
    std::int64_t eval(std::int64_t q) const;

    /// Image in the quotient by L: keeps the constant term only.
    LPolynomial mod_l() const;

    /// The polynomial m with *this == L * m, when the constant term vanishes.
    std::optional<LPolynomial> div_l() const;

    bool operator==(const LPolynomial& rhs) const = default;

    /// Canonical text form, descending degrees: "L^3 + 9*L^2 + 9*L + 1".
    std::string to_string() const;

    const std::map<std::int64_t, std::int64_t>& coefficients() const { return coeffs_; }

    /// Rebuild from (degree, coeff) pairs, dropping zeros and summing repeats.
    static LPolynomial from_coefficients(const std::map<std::int64_t, std::int64_t>& coeffs);

private:
    // degree -> coefficient, canonical sparse form
    std::map<std::int64_t, std::int64_t> coeffs_;
};

}  // namespace motivic
