#include "motivic/motivic_class.hpp"

#include <sstream>
#include <stdexcept>

#include "motivic/checked.hpp"

namespace motivic {

AtomMonomial AtomMonomial::atom(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
    AtomMonomial m;
    m.factors_.emplace_back(name, 1);
    return m;
}

AtomMonomial AtomMonomial::operator*(const AtomMonomial& rhs) const {
    AtomMonomial out;
    auto a = factors_.begin();
    auto b = rhs.factors_.begin();
    while (a != factors_.end() || b != rhs.factors_.end()) {
        if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, checked_add(a->second, b->second));
            ++a;
            ++b;
        }
    }
    return out;
}

std::string AtomMonomial::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, exp] : factors_) {
        if (!first) os << "*";
        first = false;
        os << name;
        if (exp > 1) os << "^" << exp;
    }
    return os.str();
}

MotivicClass MotivicClass::from_lpoly(const LPolynomial& p) {
    MotivicClass c;
    if (!p.is_zero()) c.terms_[AtomMonomial::unit()] = p;
    return c;
}

MotivicClass MotivicClass::from_atom(const std::string& name) {
    return from_term(AtomMonomial::atom(name), LPolynomial::one());
}

MotivicClass MotivicClass::from_term(const AtomMonomial& monomial, const LPolynomial& coeff) {
    MotivicClass c;
    if (!coeff.is_zero()) c.terms_[monomial] = coeff;
    return c;
}

bool MotivicClass::is_atom_free() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

std::optional<LPolynomial> MotivicClass::as_lpoly() const {
    if (!is_atom_free()) return std::nullopt;
    if (terms_.empty()) return LPolynomial::zero();
    return terms_.begin()->second;
}

LPolynomial MotivicClass::coeff(const AtomMonomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? LPolynomial::zero() : it->second;
}

void MotivicClass::add_term(const AtomMonomial& m, const LPolynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, p);
    if (!inserted) {
        it->second = it->second + p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MotivicClass MotivicClass::operator+(const MotivicClass& rhs) const {
    MotivicClass out = *this;
    for (const auto& [m, p] : rhs.terms_) out.add_term(m, p);
    return out;
}

MotivicClass MotivicClass::operator-() const {
    MotivicClass out;
    for (const auto& [m, p] : terms_) out.terms_[m] = -p;
    return out;
}

MotivicClass MotivicClass::operator-(const MotivicClass& rhs) const { return *this + (-rhs); }

MotivicClass MotivicClass::operator*(const MotivicClass& rhs) const {
    MotivicClass out;
    for (const auto& [ma, pa] : terms_) {
        for (const auto& [mb, pb] : rhs.terms_) {
            out.add_term(ma * mb, pa * pb);
        }
    }
    return out;
}

MotivicClass MotivicClass::scaled(std::int64_t k) const {
    MotivicClass out;
    if (k == 0) return out;
    for (const auto& [m, p] : terms_) out.terms_[m] = p.scaled(k);
    return out;
}

MotivicClass MotivicClass::mod_l() const {
    MotivicClass out;
    for (const auto& [m, p] : terms_) out.add_term(m, p.mod_l());
    return out;
}

std::optional<MotivicClass> MotivicClass::div_l() const {
    MotivicClass out;
    for (const auto& [m, p] : terms_) {
        auto q = p.div_l();
        if (!q) return std::nullopt;
        out.terms_[m] = *q;
    }
    return out;
}

std::string MotivicClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, p] : terms_) {
        if (m.is_unit()) {
            // the unit monomial sorts first, so its polynomial leads the output
            os << p.to_string();
            first = false;
            continue;
        }
        const auto& coeffs = p.coefficients();
        if (coeffs.size() == 1) {
            const auto [deg, c] = *coeffs.begin();
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            const std::uint64_t mag =
                c < 0 ? ~static_cast<std::uint64_t>(c) + 1 : static_cast<std::uint64_t>(c);
            if (mag != 1) os << mag << "*";
            if (deg >= 1) {
                os << "L";
                if (deg > 1) os << "^" << deg;
                os << "*";
            }
            os << m.to_string();
        } else {
            if (!first) os << " + ";
            first = false;
            os << "(" << p.to_string() << ")*" << m.to_string();
        }
    }
    return os.str();
}

}  // namespace motivic
