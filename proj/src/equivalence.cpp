#include "motivic/equivalence.hpp"

#include <sstream>

namespace motivic {

namespace {

// Flips the sign when the leading coefficient (highest degree of the largest
// monomial) is negative, so reports print a canonical representative of
// {d, -d}.
MotivicClass sign_normalized(const MotivicClass& d) {
    if (d.is_zero()) return d;
    const auto& [monomial, poly] = *d.terms().rbegin();
    return poly.coeff(poly.degree()) < 0 ? -d : d;
}

}  // namespace

EquivalenceReport l_equivalent(const MotivicClass& a, const MotivicClass& b) {
    EquivalenceReport report;
    report.difference = sign_normalized(a - b);
    report.verdict = report.difference.is_zero();
    report.note =
        "checked in Z[L][atoms], where multiplication by L is injective: vanishing after "
        "multiplying by L^n is the same as vanishing, so L-equivalence coincides with equality; "
        "genuine L-torsion is not representable in this model";
    return report;
}

MotivicClass stable_birational_class(const MotivicClass& a) { return a.mod_l(); }

std::optional<MotivicClass> rationality_witness(const MotivicClass& a, std::int64_t d) {
    if (d < 0) return std::nullopt;
    return (a - MotivicClass::from_lpoly(LPolynomial::projective(d))).div_l();
}

std::optional<MotivicClass> birational_difference(const MotivicClass& a, const MotivicClass& b) {
    return (a - b).div_l();
}

std::string ProjectiveCombination::to_string() const {
    if (parts.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) os << " + ";
        if (parts[i].second != 1) os << parts[i].second << "*";
        os << "[P^" << parts[i].first << "]";
    }
    return os.str();
}

std::optional<ProjectiveCombination> projective_combination(const MotivicClass& m,
                                                            std::int64_t max_dim) {
    const auto poly = m.as_lpoly();
    if (!poly) return std::nullopt;
    // Peel projective classes from the top degree down; each step is forced,
    // so failure at any point means no decomposition exists.
    LPolynomial rest = *poly;
    ProjectiveCombination combo;
    while (!rest.is_zero()) {
        const std::int64_t d = rest.degree();
        const std::int64_t c = rest.coeff(d);
        if (d > max_dim || c < 0) return std::nullopt;
        rest = rest - LPolynomial::projective(d).scaled(c);
        combo.parts.emplace_back(d, c);
    }
    return combo;
}

}  // namespace motivic
