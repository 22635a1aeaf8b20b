#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace motivic {

class VarietyExpr;

/// Expressions are immutable trees shared by pointer; structural equality is
/// the equality notion everywhere.
using ExprPtr = std::shared_ptr<const VarietyExpr>;

struct EmptyNode {};
struct PointNode {};
struct AffineNode {
    std::int64_t dim;
};
struct ProjectiveNode {
    std::int64_t dim;
};
struct ProductNode {
    ExprPtr left, right;
};
struct DisjointNode {
    std::vector<ExprPtr> parts;  // non-empty
};
/// Scissor difference "total \ closed"; closedness is taken on trust.
struct ComplementNode {
    ExprPtr total, closed;
};
/// Zariski locally trivial fibration over `base` with fiber `fiber`.
struct FibrationNode {
    ExprPtr base, fiber;
};
/// Blow-up of `ambient` along `center` of constant codimension `codim` >= 1.
struct BlowUpNode {
    ExprPtr ambient, center;
    std::int64_t codim;
};
/// `factor` disjoint copies of `inner`.
struct ScaleNode {
    std::int64_t factor;
    ExprPtr inner;
};
/// Formal generator for the class of an unspecified variety; `dim` is
/// advisory bookkeeping only.
struct AtomNode {
    std::string name;
    std::optional<std::int64_t> dim;
};

class VarietyExpr {
public:
    using Node = std::variant<EmptyNode, PointNode, AffineNode, ProjectiveNode, ProductNode,
                              DisjointNode, ComplementNode, FibrationNode, BlowUpNode, ScaleNode,
                              AtomNode>;

    explicit VarietyExpr(Node node) : node_(std::move(node)) {}
    const Node& node() const { return node_; }

private:
    Node node_;
};

ExprPtr empty_space();
ExprPtr point();
ExprPtr affine(std::int64_t n);
ExprPtr projective(std::int64_t n);
ExprPtr product(ExprPtr left, ExprPtr right);
ExprPtr disjoint(std::vector<ExprPtr> parts);
ExprPtr complement(ExprPtr total, ExprPtr closed);
ExprPtr fibration(ExprPtr base, ExprPtr fiber);
ExprPtr blow_up(ExprPtr ambient, ExprPtr center, std::int64_t codim);
ExprPtr scale(std::int64_t factor, ExprPtr inner);
ExprPtr atom(std::string name, std::optional<std::int64_t> dim = std::nullopt);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

/// One-line node description for diagnostics ("blowup", "atom \"C\"", ...).
std::string node_kind(const VarietyExpr& e);

struct Diagnostic {
    std::string message;
    std::string where;  // node description of the offending subterm
};

/// Structural validation; an empty list means well-formed. Total: never throws.
std::vector<Diagnostic> validate(const ExprPtr& e);

/// A configuration of distinct points, identified only up to count; labels
/// are user bookkeeping and never reach the class computation.
struct PointConfiguration {
    std::int64_t count = 0;
    std::optional<std::vector<std::string>> labels;
};

std::vector<Diagnostic> validate_configuration(const PointConfiguration& cfg);

/// Blow-up of P^3 at the points of the configuration; only cfg.count enters
/// the tree. Throws std::invalid_argument when the configuration is invalid.
ExprPtr blowup_p3_points(const PointConfiguration& cfg);

}  // namespace motivic
