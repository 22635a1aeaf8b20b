#pragma once

#include <optional>

#include "motivic/motivic_class.hpp"
#include "motivic/variety.hpp"

namespace motivic {

/// Result of rewriting an expression to canonical form: exactly one of the
/// class or a diagnostic naming the offending subterm.
struct NormalizeOutcome {
    std::optional<MotivicClass> cls;
    std::optional<Diagnostic> failure;

    bool ok() const { return cls.has_value(); }
};

/// Bottom-up structural rewrite into the coefficient ring:
///   Empty -> 0, Point -> 1, Affine(n) -> L^n, Projective(n) -> 1+L+...+L^n,
///   Product and Fibration -> product of the component classes,
///   Disjoint -> sum, Complement(X,Z) -> class(X) - class(Z),
///   BlowUp(Y,Z,c) -> class(Y) - class(Z) + class(Z)*class(P^(c-1)),
///   Scale(k,a) -> k*class(a), Atom -> its formal generator.
/// A structurally invalid input yields a failure outcome instead of a class.
/// Throws ArithmeticOverflow if a coefficient leaves 64-bit range.
NormalizeOutcome normalize(const ExprPtr& e);

/// normalize, but an invalid input throws std::invalid_argument.
MotivicClass normalize_or_throw(const ExprPtr& e);

}  // namespace motivic
