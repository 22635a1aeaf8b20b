#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "motivic/lpoly.hpp"
#include "motivic/variety.hpp"

namespace motivic {

/// Cap on candidate tuples any single enumeration may visit.
inline constexpr std::int64_t kDefaultBudget = 100'000'000;

/// A prime field F_p with 2 <= p <= 97. Construction validates primality.
struct PrimeField {
    std::int64_t p;
    explicit PrimeField(std::int64_t p);
};

struct AffineAmbient {
    std::int64_t dim;
};
struct ProjectiveAmbient {
    std::int64_t dim;
};
struct MultiProjectiveAmbient {
    std::vector<std::int64_t> dims;
};
using Ambient = std::variant<AffineAmbient, ProjectiveAmbient, MultiProjectiveAmbient>;

/// Coordinate block layout of an ambient space.
struct AmbientBlock {
    std::int64_t start;    // index of the block's first coordinate
    std::int64_t ncoords;  // number of coordinates (projective: dim + 1)
    bool projective;
};

std::vector<AmbientBlock> ambient_blocks(const Ambient& ambient);
std::int64_t ambient_coord_count(const Ambient& ambient);
/// Coordinate names, one letter per block: x0..x3, y0..y2, ...
std::vector<std::string> ambient_variables(const Ambient& ambient);

/// Multivariate polynomial with exact integer coefficients over a fixed
/// coordinate list, sparse canonical form (no zero coefficients).
class MultiPoly {
public:
    explicit MultiPoly(std::int64_t nvars) : nvars_(nvars) {}

    std::int64_t nvars() const { return nvars_; }
    const std::map<std::vector<std::int64_t>, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * prod(var_i ^ exps[i]); merges with an existing term.
    void add_term(std::vector<std::int64_t> exps, std::int64_t coeff);

    std::int64_t eval_mod(std::span<const std::int64_t> point, std::int64_t p) const;

    /// Total degree in the coordinate range [start, start+ncoords); -1 when zero.
    /// Returns the common degree, or throws NonHomogeneousEquation if mixed.
    std::int64_t homogeneous_degree_in(std::int64_t start, std::int64_t ncoords) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

private:
    std::int64_t nvars_;
    std::map<std::vector<std::int64_t>, std::int64_t> terms_;
};

/// A polynomial system over a prime field in an affine, projective, or
/// multi-projective ambient space, ready for brute-force enumeration.
struct CountingProblem {
    Ambient ambient;
    std::vector<MultiPoly> equations;
    PrimeField field;
};

struct CountSample {
    std::int64_t q;
    std::int64_t count;  // non-negative for every genuinely enumerated problem
    bool operator==(const CountSample&) const = default;
};

/// One representative per point of P^n(F_q): the representative whose first
/// nonzero coordinate is 1, listed in ascending lexicographic tuple order.
std::vector<std::vector<std::int64_t>> enumerate_projective(std::int64_t n, PrimeField field,
                                                            std::int64_t budget = kDefaultBudget);

/// Number of ambient points (one representative per projective point, per
/// block) satisfying every equation.
CountSample count_points(const CountingProblem& problem, std::int64_t budget = kDefaultBudget);

/// Which k rational points of the ambient space a point blow-up removes.
/// The class is independent of the choice; offering two lets callers check that.
enum class CenterChoice { LexFirst, LexLast };

struct CountOptions {
    std::int64_t budget = kDefaultBudget;
    CenterChoice centers = CenterChoice::LexFirst;
};

/// Brute-force count of rational points of a countable expression: built from
/// empty/pt/A/P/product/disjoint/complement/scale and blow-ups of P(n) along
/// k rational points (codim n). Atoms and abstract fibrations are not
/// countable. Scissor differences are taken on trust, so the count of a
/// complement that is not a genuine closed embedding may be negative.
CountSample count_expression(const ExprPtr& e, PrimeField field, const CountOptions& opts = {});

/// Exact Lagrange interpolation through >= 2 samples with distinct q; throws
/// NonIntegralFit unless the result has integer coefficients and reproduces
/// every sample.
LPolynomial fit_polynomial(const std::vector<CountSample>& samples);

/// Library example problem: the blow-up of P^3 at [1:0:0:0] as the subvariety
/// of P^3 x P^2 cut by the 2x2 minors of [[x1,x2,x3],[y0,y1,y2]].
CountingProblem one_point_blowup_p3_problem(PrimeField field);

}  // namespace motivic
