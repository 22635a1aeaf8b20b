#include "motivic/normalize.hpp"

#include <stdexcept>
#include <variant>

namespace motivic {

namespace {

MotivicClass class_of(const ExprPtr& e) {
    return std::visit(
        [&](const auto& x) -> MotivicClass {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmptyNode>) {
                return MotivicClass::zero();
            } else if constexpr (std::is_same_v<T, PointNode>) {
                return MotivicClass::one();
            } else if constexpr (std::is_same_v<T, AffineNode>) {
                return MotivicClass::from_lpoly(LPolynomial::affine(x.dim));
            } else if constexpr (std::is_same_v<T, ProjectiveNode>) {
                return MotivicClass::from_lpoly(LPolynomial::projective(x.dim));
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                return class_of(x.left) * class_of(x.right);
            } else if constexpr (std::is_same_v<T, DisjointNode>) {
                MotivicClass sum = MotivicClass::zero();
                for (const auto& part : x.parts) sum = sum + class_of(part);
                return sum;
            } else if constexpr (std::is_same_v<T, ComplementNode>) {
                return class_of(x.total) - class_of(x.closed);
            } else if constexpr (std::is_same_v<T, FibrationNode>) {
                return class_of(x.base) * class_of(x.fiber);
            } else if constexpr (std::is_same_v<T, BlowUpNode>) {
                const MotivicClass ambient = class_of(x.ambient);
                const MotivicClass center = class_of(x.center);
                const MotivicClass fiber =
                    MotivicClass::from_lpoly(LPolynomial::projective(x.codim - 1));
                return ambient - center + center * fiber;
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return class_of(x.inner).scaled(x.factor);
            } else {
                static_assert(std::is_same_v<T, AtomNode>);
                return MotivicClass::from_atom(x.name);
            }
        },
        e->node());
}

}  // namespace

NormalizeOutcome normalize(const ExprPtr& e) {
    const auto diags = validate(e);
    if (!diags.empty()) return {std::nullopt, diags.front()};
    return {class_of(e), std::nullopt};
}

MotivicClass normalize_or_throw(const ExprPtr& e) {
    NormalizeOutcome out = normalize(e);
    if (!out.ok()) {
        throw std::invalid_argument(out.failure->message + " in " + out.failure->where);
    }
    return std::move(*out.cls);
}

}  // namespace motivic
