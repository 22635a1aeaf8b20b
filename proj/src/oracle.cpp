#include "motivic/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "motivic/checked.hpp"
#include "motivic/errors.hpp"

namespace motivic {

PrimeField::PrimeField(std::int64_t p_) : p(p_) {
    if (p < 2 || p > 97) throw std::invalid_argument("field characteristic must be in [2, 97]");
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) throw std::invalid_argument("field characteristic must be prime");
    }
}

std::vector<AmbientBlock> ambient_blocks(const Ambient& ambient) {
    std::vector<AmbientBlock> blocks;
    if (const auto* aff = std::get_if<AffineAmbient>(&ambient)) {
        if (aff->dim < 0) throw std::invalid_argument("affine dimension must be non-negative");
        blocks.push_back({0, aff->dim, false});
    } else if (const auto* proj = std::get_if<ProjectiveAmbient>(&ambient)) {
        if (proj->dim < 0) throw std::invalid_argument("projective dimension must be non-negative");
        blocks.push_back({0, proj->dim + 1, true});
    } else {
        const auto& dims = std::get<MultiProjectiveAmbient>(ambient).dims;
        if (dims.empty()) throw std::invalid_argument("multi-projective ambient needs at least one block");
        std::int64_t start = 0;
        for (std::int64_t d : dims) {
            if (d < 0) throw std::invalid_argument("projective dimension must be non-negative");
            blocks.push_back({start, d + 1, true});
            start += d + 1;
        }
    }
    return blocks;
}

std::int64_t ambient_coord_count(const Ambient& ambient) {
    std::int64_t total = 0;
    for (const auto& b : ambient_blocks(ambient)) total += b.ncoords;
    return total;
}

std::vector<std::string> ambient_variables(const Ambient& ambient) {
    static const char letters[] = "xyzwvu";
    const auto blocks = ambient_blocks(ambient);
    if (blocks.size() > 6) throw std::invalid_argument("at most 6 coordinate blocks are supported");
    std::vector<std::string> names;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::int64_t i = 0; i < blocks[b].ncoords; ++i) {
            names.push_back(std::string(1, letters[b]) + std::to_string(i));
        }
    }
    return names;
}

void MultiPoly::add_term(std::vector<std::int64_t> exps, std::int64_t coeff) {
    if (static_cast<std::int64_t>(exps.size()) != nvars_) {
        throw std::invalid_argument("exponent vector length does not match the variable count");
    }
    for (std::int64_t e : exps) {
        if (e < 0) throw std::invalid_argument("exponents must be non-negative");
    }
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (exp > 0) {
        if (exp & 1) r = (r * base) % p;
        base = (base * base) % p;
        exp >>= 1;
    }
    return r;
}

}  // namespace

std::int64_t MultiPoly::eval_mod(std::span<const std::int64_t> point, std::int64_t p) const {
    std::int64_t sum = 0;
    for (const auto& [exps, coeff] : terms_) {
        std::int64_t term = coeff % p;
        if (term < 0) term += p;
        for (std::size_t i = 0; i < exps.size() && term != 0; ++i) {
            if (exps[i] != 0) term = (term * pow_mod(point[i], exps[i], p)) % p;
        }
        sum = (sum + term) % p;
    }
    return sum;
}

std::int64_t MultiPoly::homogeneous_degree_in(std::int64_t start, std::int64_t ncoords) const {
    std::int64_t deg = -1;
    for (const auto& [exps, coeff] : terms_) {
        std::int64_t d = 0;
        for (std::int64_t i = start; i < start + ncoords; ++i) d += exps[i];
        if (deg == -1) {
            deg = d;
        } else if (d != deg) {
            throw NonHomogeneousEquation("equation mixes degrees " + std::to_string(deg) + " and " +
                                         std::to_string(d) + " in a projective coordinate block");
        }
    }
    return deg;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending lexicographic exponent order: x0^2 + 2*x0*x1 - 3
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        if (first) {
            if (coeff < 0) os << "-";
            first = false;
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        const std::uint64_t mag =
            coeff < 0 ? ~static_cast<std::uint64_t>(coeff) + 1 : static_cast<std::uint64_t>(coeff);
        bool any_var = false;
        for (std::size_t i = 0; i < exps.size(); ++i) any_var = any_var || exps[i] != 0;
        if (mag != 1 || !any_var) os << mag;
        bool need_star = mag != 1 || !any_var;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            os << var_names.at(i);
            if (exps[i] > 1) os << "^" << exps[i];
        }
    }
    return os.str();
}

namespace {

// Candidate tuples a full scan of the block visits: q^ncoords.
std::int64_t block_tuple_space(const AmbientBlock& block, std::int64_t q) {
    std::int64_t space = 1;
    for (std::int64_t i = 0; i < block.ncoords; ++i) space = checked_mul(space, q);
    return space;
}

void check_budget(const std::vector<AmbientBlock>& blocks, std::int64_t q, std::int64_t budget) {
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    std::int64_t space = 1;
    try {
        for (const auto& b : blocks) space = checked_mul(space, block_tuple_space(b, q));
    } catch (const ArithmeticOverflow&) {
        throw BudgetExceeded("candidate tuple space exceeds 64-bit range");
    }
    if (space > budget) {
        throw BudgetExceeded("enumeration needs " + std::to_string(space) +
                             " candidate tuples, budget is " + std::to_string(budget));
    }
}

// Lazy walk of one coordinate block inside a shared coordinate buffer.
// Affine blocks run an odometer over all q^n tuples; projective blocks walk
// point representatives (first nonzero coordinate == 1) in ascending
// lexicographic tuple order.
class BlockCursor {
public:
    BlockCursor(const AmbientBlock& block, std::int64_t q) : block_(block), q_(q) {}

    void reset(std::span<std::int64_t> coords) {
        for (std::int64_t i = 0; i < block_.ncoords; ++i) coords[block_.start + i] = 0;
        if (block_.projective) {
            lead_ = block_.ncoords - 1;
            coords[block_.start + lead_] = 1;
        }
    }

    // Advances to the next tuple; false once the block wrapped around.
    bool advance(std::span<std::int64_t> coords) {
        const std::int64_t first = block_.start + (block_.projective ? lead_ + 1 : 0);
        for (std::int64_t i = block_.start + block_.ncoords - 1; i >= first; --i) {
            if (++coords[i] < q_) return true;
            coords[i] = 0;
        }
        if (!block_.projective || lead_ == 0) return false;
        coords[block_.start + lead_] = 0;
        --lead_;
        coords[block_.start + lead_] = 1;
        return true;
    }

private:
    AmbientBlock block_;
    std::int64_t q_;
    std::int64_t lead_ = 0;
};

}  // namespace

std::vector<std::vector<std::int64_t>> enumerate_projective(std::int64_t n, PrimeField field,
                                                            std::int64_t budget) {
    if (n < 0) throw std::invalid_argument("projective dimension must be non-negative");
    const AmbientBlock block{0, n + 1, true};
    check_budget({block}, field.p, budget);
    std::vector<std::vector<std::int64_t>> reps;
    std::vector<std::int64_t> coords(n + 1);
    BlockCursor cursor(block, field.p);
    cursor.reset(coords);
    do {
        reps.push_back(coords);
    } while (cursor.advance(coords));
    return reps;
}

CountSample count_points(const CountingProblem& problem, std::int64_t budget) {
    const auto blocks = ambient_blocks(problem.ambient);
    const std::int64_t nvars = ambient_coord_count(problem.ambient);
    for (const auto& eq : problem.equations) {
        if (eq.nvars() != nvars) {
            throw std::invalid_argument("equation variable count does not match the ambient space");
        }
        for (const auto& b : blocks) {
            if (b.projective) eq.homogeneous_degree_in(b.start, b.ncoords);
        }
    }
    check_budget(blocks, problem.field.p, budget);

    std::vector<std::int64_t> coords(nvars, 0);
    std::vector<BlockCursor> cursors;
    cursors.reserve(blocks.size());
    for (const auto& b : blocks) {
        cursors.emplace_back(b, problem.field.p);
        cursors.back().reset(coords);
    }

    std::int64_t count = 0;
    for (;;) {
        bool ok = true;
        for (const auto& eq : problem.equations) {
            if (eq.eval_mod(coords, problem.field.p) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        // odometer across blocks, last block fastest
        std::size_t b = cursors.size();
        while (b > 0) {
            if (cursors[b - 1].advance(coords)) break;
            cursors[b - 1].reset(coords);
            --b;
        }
        if (b == 0) break;
    }
    return {problem.field.p, count};
}

namespace {

std::int64_t count_projective_reps(std::int64_t n, std::int64_t q, std::int64_t budget) {
    const AmbientBlock block{0, n + 1, true};
    check_budget({block}, q, budget);
    std::vector<std::int64_t> coords(n + 1);
    BlockCursor cursor(block, q);
    cursor.reset(coords);
    std::int64_t count = 0;
    do {
        ++count;
    } while (cursor.advance(coords));
    return count;
}

std::int64_t count_affine_tuples(std::int64_t n, std::int64_t q, std::int64_t budget) {
    const AmbientBlock block{0, n, false};
    check_budget({block}, q, budget);
    std::vector<std::int64_t> coords(n);
    BlockCursor cursor(block, q);
    cursor.reset(coords);
    std::int64_t count = 0;
    do {
        ++count;
    } while (cursor.advance(coords));
    return count;
}

// Stratified count of the blow-up of P^n at k rational points: walk the
// ambient representatives skipping the k chosen centers, then add one
// enumerated P^(n-1) fiber per center.
std::int64_t count_point_blowup(std::int64_t n, std::int64_t k, std::int64_t q,
                                const CountOptions& opts) {
    const std::int64_t total = count_projective_reps(n, q, opts.budget);
    if (k > total) {
        throw TooFewRationalPoints("blow-up asks for " + std::to_string(k) +
                                   " distinct rational centers but P^" + std::to_string(n) +
                                   "(F_" + std::to_string(q) + ") has only " + std::to_string(total));
    }
    const std::int64_t lo = opts.centers == CenterChoice::LexFirst ? 0 : total - k;
    const std::int64_t hi = lo + k;
    const AmbientBlock block{0, n + 1, true};
    std::vector<std::int64_t> coords(n + 1);
    BlockCursor cursor(block, q);
    cursor.reset(coords);
    std::int64_t kept = 0;
    std::int64_t index = 0;
    do {
        if (index < lo || index >= hi) ++kept;
        ++index;
    } while (cursor.advance(coords));
    const std::int64_t fiber = count_projective_reps(n - 1, q, opts.budget);
    std::int64_t result = kept;
    for (std::int64_t i = 0; i < k; ++i) result = checked_add(result, fiber);
    return result;
}

std::int64_t count_rec(const ExprPtr& e, std::int64_t q, const CountOptions& opts) {
    return std::visit(
        [&](const auto& x) -> std::int64_t {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmptyNode>) {
                return 0;
            } else if constexpr (std::is_same_v<T, PointNode>) {
                return 1;
            } else if constexpr (std::is_same_v<T, AffineNode>) {
                return count_affine_tuples(x.dim, q, opts.budget);
            } else if constexpr (std::is_same_v<T, ProjectiveNode>) {
                return count_projective_reps(x.dim, q, opts.budget);
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                return checked_mul(count_rec(x.left, q, opts), count_rec(x.right, q, opts));
            } else if constexpr (std::is_same_v<T, DisjointNode>) {
                std::int64_t sum = 0;
                for (const auto& part : x.parts) sum = checked_add(sum, count_rec(part, q, opts));
                return sum;
            } else if constexpr (std::is_same_v<T, ComplementNode>) {
                return checked_sub(count_rec(x.total, q, opts), count_rec(x.closed, q, opts));
            } else if constexpr (std::is_same_v<T, FibrationNode>) {
                throw NotCountable("abstract fibration is not countable");
            } else if constexpr (std::is_same_v<T, BlowUpNode>) {
                const auto* ambient = std::get_if<ProjectiveNode>(&x.ambient->node());
                if (!ambient) {
                    throw NotCountable("blow-up is countable only with a P(n) ambient space");
                }
                std::int64_t k = 0;
                if (std::holds_alternative<PointNode>(x.center->node())) {
                    k = 1;
                } else if (const auto* s = std::get_if<ScaleNode>(&x.center->node());
                           s && std::holds_alternative<PointNode>(s->inner->node())) {
                    k = s->factor;
                } else {
                    throw NotCountable("blow-up is countable only along k distinct rational points");
                }
                if (x.codim != ambient->dim) {
                    throw NotCountable("point blow-up of P(" + std::to_string(ambient->dim) +
                                       ") must have codim " + std::to_string(ambient->dim));
                }
                return count_point_blowup(ambient->dim, k, q, opts);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return checked_mul(x.factor, count_rec(x.inner, q, opts));
            } else {
                static_assert(std::is_same_v<T, AtomNode>);
                throw NotCountable("atom \"" + x.name + "\" is not countable");
            }
        },
        e->node());
}

}  // namespace

CountSample count_expression(const ExprPtr& e, PrimeField field, const CountOptions& opts) {
    const auto diags = validate(e);
    if (!diags.empty()) {
        throw std::invalid_argument("invalid expression: " + diags.front().message + " in " +
                                    diags.front().where);
    }
    return {field.p, count_rec(e, field.p, opts)};
}

namespace {

// Exact rational with reduced 64-bit numerator and positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::invalid_argument("zero denominator");
        if (d < 0) {
            n = checked_neg(n);
            d = checked_neg(d);
        }
        const std::int64_t g = std::gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        return {n, d};
    }

    Rational operator+(const Rational& r) const {
        return make(checked_add(checked_mul(num, r.den), checked_mul(r.num, den)),
                    checked_mul(den, r.den));
    }

    Rational operator*(const Rational& r) const {
        // cross-reduce to keep intermediates small
        const std::int64_t g1 = std::gcd(num, r.den);
        const std::int64_t g2 = std::gcd(r.num, den);
        const std::int64_t n1 = g1 > 1 ? num / g1 : num;
        const std::int64_t d1 = g1 > 1 ? r.den / g1 : r.den;
        const std::int64_t n2 = g2 > 1 ? r.num / g2 : r.num;
        const std::int64_t d2 = g2 > 1 ? den / g2 : den;
        return make(checked_mul(n1, n2), checked_mul(d2, d1));
    }
};

}  // namespace

LPolynomial fit_polynomial(const std::vector<CountSample>& samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("fit_polynomial requires at least two samples");
    }
    std::set<std::int64_t> seen;
    for (const auto& s : samples) {
        if (s.q < 2) throw std::invalid_argument("sample points must be >= 2");
        if (!seen.insert(s.q).second) {
            throw std::invalid_argument("sample points must be pairwise distinct");
        }
    }

    const std::size_t n = samples.size();
    std::vector<Rational> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        // integer numerator poly prod_{j != i} (x - q_j) and scalar denominator
        std::vector<std::int64_t> basis{1};
        std::int64_t denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<std::int64_t> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = checked_add(next[k + 1], basis[k]);
                next[k] = checked_add(next[k], checked_mul(basis[k], checked_neg(samples[j].q)));
            }
            basis = std::move(next);
            denom = checked_mul(denom, checked_sub(samples[i].q, samples[j].q));
        }
        const Rational scale = Rational::make(samples[i].count, denom);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            acc[k] = acc[k] + scale * Rational::make(basis[k], 1);
        }
    }

    std::map<std::int64_t, std::int64_t> coeffs;
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (acc[k].den != 1) {
            throw NonIntegralFit("interpolant has a non-integer coefficient at degree " +
                                 std::to_string(k) +
                                 "; supply more primes or the count is not polynomial");
        }
        coeffs[static_cast<std::int64_t>(k)] = acc[k].num;
    }
    const LPolynomial fit = LPolynomial::from_coefficients(coeffs);
    for (const auto& s : samples) {
        if (fit.eval(s.q) != s.count) {
            throw NonIntegralFit("interpolant fails to reproduce the sample at q = " +
                                 std::to_string(s.q));
        }
    }
    return fit;
}

CountingProblem one_point_blowup_p3_problem(PrimeField field) {
    const Ambient ambient = MultiProjectiveAmbient{{3, 2}};
    // coordinates: x0..x3, y0..y2; minors of [[x1,x2,x3],[y0,y1,y2]]
    const std::int64_t nvars = 7;
    auto minor = [&](int xi, int xj, int yi, int yj) {
        MultiPoly p(nvars);
        std::vector<std::int64_t> a(nvars, 0), b(nvars, 0);
        a[xi] = 1;
        a[4 + yj] = 1;
        b[xj] = 1;
        b[4 + yi] = 1;
        p.add_term(a, 1);
        p.add_term(b, -1);
        return p;
    };
    std::vector<MultiPoly> equations;
    equations.push_back(minor(1, 2, 0, 1));  // x1*y1 - x2*y0
    equations.push_back(minor(1, 3, 0, 2));  // x1*y2 - x3*y0
    equations.push_back(minor(2, 3, 1, 2));  // x2*y2 - x3*y1
    return {ambient, std::move(equations), field};
}

}  // namespace motivic
