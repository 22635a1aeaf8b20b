#include "motivic/lpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "motivic/checked.hpp"

namespace motivic {

LPolynomial LPolynomial::monomial(std::int64_t degree, std::int64_t coeff) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be non-negative");
    LPolynomial p;
    if (coeff != 0) p.coeffs_[degree] = coeff;
    return p;
}

LPolynomial LPolynomial::projective(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("projective dimension must be non-negative");
    LPolynomial p;
    for (std::int64_t d = 0; d <= n; ++d) p.coeffs_[d] = 1;
    return p;
}

std::int64_t LPolynomial::coeff(std::int64_t degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? 0 : it->second;
}

LPolynomial LPolynomial::from_coefficients(const std::map<std::int64_t, std::int64_t>& coeffs) {
    LPolynomial p;
    for (const auto& [deg, c] : coeffs) {
        if (deg < 0) throw std::invalid_argument("negative degree in polynomial");
        if (c == 0) continue;
        auto [it, inserted] = p.coeffs_.emplace(deg, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) p.coeffs_.erase(it);
        }
    }
    return p;
}

LPolynomial LPolynomial::operator+(const LPolynomial& rhs) const {
    LPolynomial out = *this;
    for (const auto& [deg, c] : rhs.coeffs_) {
        auto [it, inserted] = out.coeffs_.emplace(deg, c);
        if (!inserted) {
            it->second = checked_add(it->second, c);
            if (it->second == 0) out.coeffs_.erase(it);
        }
    }
    return out;
}

LPolynomial LPolynomial::operator-() const {
    LPolynomial out;
    for (const auto& [deg, c] : coeffs_) out.coeffs_[deg] = checked_neg(c);
    return out;
}

LPolynomial LPolynomial::operator-(const LPolynomial& rhs) const { return *this + (-rhs); }

LPolynomial LPolynomial::operator*(const LPolynomial& rhs) const {
    LPolynomial out;
    for (const auto& [da, ca] : coeffs_) {
        for (const auto& [db, cb] : rhs.coeffs_) {
            const std::int64_t deg = checked_add(da, db);
            const std::int64_t term = checked_mul(ca, cb);
            auto [it, inserted] = out.coeffs_.emplace(deg, term);
            if (!inserted) {
                it->second = checked_add(it->second, term);
                if (it->second == 0) out.coeffs_.erase(it);
            }
        }
    }
    return out;
}

LPolynomial LPolynomial::scaled(std::int64_t k) const {
    LPolynomial out;
    if (k == 0) return out;
    for (const auto& [deg, c] : coeffs_) out.coeffs_[deg] = checked_mul(c, k);
    return out;
}

std::int64_t LPolynomial::eval(std::int64_t q) const {
    if (q < 2) throw std::invalid_argument("eval requires q >= 2");
    // Horner over the sparse terms, highest degree first.
    std::int64_t acc = 0;
    std::int64_t prev_deg = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_deg >= 0) {
            for (std::int64_t d = prev_deg; d > it->first; --d) acc = checked_mul(acc, q);
        }
        acc = checked_add(acc, it->second);
        prev_deg = it->first;
    }
    if (prev_deg > 0) {
        for (std::int64_t d = prev_deg; d > 0; --d) acc = checked_mul(acc, q);
    }
    return acc;
}

LPolynomial LPolynomial::mod_l() const { return constant(constant_term()); }

std::optional<LPolynomial> LPolynomial::div_l() const {
    if (constant_term() != 0) return std::nullopt;
    LPolynomial out;
    for (const auto& [deg, c] : coeffs_) out.coeffs_[deg - 1] = c;
    return out;
}

std::string LPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const auto [deg, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        // |c| without overflowing on INT64_MIN
        const std::uint64_t mag = c < 0 ? ~static_cast<std::uint64_t>(c) + 1 : static_cast<std::uint64_t>(c);
        if (deg == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << "*";
            os << "L";
            if (deg > 1) os << "^" << deg;
        }
    }
    return os.str();
}

}  // namespace motivic
