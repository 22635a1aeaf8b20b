#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/motivic_class.hpp"

namespace motivic {

/// Outcome of an equivalence check. `difference` is sign-normalized so its
/// leading coefficient is positive; verdict is true exactly when it is zero.
struct EquivalenceReport {
    bool verdict = false;
    MotivicClass difference;
    std::optional<std::string> note;
};

/// L-equivalence check: (a - b) * L^n = 0 for some n. The coefficient ring
/// here is a polynomial ring, where multiplication by L is injective, so the
/// verdict reduces to a == b; the report's note records that caveat.
EquivalenceReport l_equivalent(const MotivicClass& a, const MotivicClass& b);

/// Image in the quotient by L (stable birational invariant): sets L = 0.
MotivicClass stable_birational_class(const MotivicClass& a);

/// The class M with a = [P^d] + L*M, when a - [P^d] is divisible by L;
/// nullopt otherwise. Presence is a necessary condition for rationality in
/// dimension d, never claimed sufficient.
std::optional<MotivicClass> rationality_witness(const MotivicClass& a, std::int64_t d);

/// The class M with a - b = L*M, when divisible; nullopt otherwise. Absence
/// certifies the two classes cannot come from smooth birationally equivalent
/// varieties.
std::optional<MotivicClass> birational_difference(const MotivicClass& a, const MotivicClass& b);

/// A decomposition sum_i mult * [P^dim] with positive multiplicities,
/// dimensions descending and bounded by max_dim.
struct ProjectiveCombination {
    std::vector<std::pair<std::int64_t, std::int64_t>> parts;  // (dim, mult)

    /// "8*[P^1]", "[P^2] + 3*[P^0]"; the empty combination prints "0".
    std::string to_string() const;
};

/// Greedy decomposition of an atom-free class as a non-negative integer
/// combination of projective-space classes of dimension <= max_dim; nullopt
/// when no such decomposition exists (the decomposition is unique when it
/// does). Convenience for reporting the shape of witnesses.
std::optional<ProjectiveCombination> projective_combination(const MotivicClass& m,
                                                            std::int64_t max_dim);

}  // namespace motivic
