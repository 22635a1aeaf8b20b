#include "motivic/variety.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace motivic {

namespace {

ExprPtr make(VarietyExpr::Node node) { return std::make_shared<const VarietyExpr>(std::move(node)); }

}  // namespace

ExprPtr empty_space() { return make(EmptyNode{}); }
ExprPtr point() { return make(PointNode{}); }
ExprPtr affine(std::int64_t n) { return make(AffineNode{n}); }
ExprPtr projective(std::int64_t n) { return make(ProjectiveNode{n}); }
ExprPtr product(ExprPtr left, ExprPtr right) { return make(ProductNode{std::move(left), std::move(right)}); }
ExprPtr disjoint(std::vector<ExprPtr> parts) {
    // a union of one piece is that piece; the concrete syntax cannot tell them apart
    if (parts.size() == 1) return std::move(parts[0]);
    return make(DisjointNode{std::move(parts)});
}
ExprPtr complement(ExprPtr total, ExprPtr closed) {
    return make(ComplementNode{std::move(total), std::move(closed)});
}
ExprPtr fibration(ExprPtr base, ExprPtr fiber) {
    return make(FibrationNode{std::move(base), std::move(fiber)});
}
ExprPtr blow_up(ExprPtr ambient, ExprPtr center, std::int64_t codim) {
    return make(BlowUpNode{std::move(ambient), std::move(center), codim});
}
ExprPtr scale(std::int64_t factor, ExprPtr inner) {
    return make(ScaleNode{factor, std::move(inner)});
}
ExprPtr atom(std::string name, std::optional<std::int64_t> dim) {
    return make(AtomNode{std::move(name), dim});
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    const auto& na = a->node();
    const auto& nb = b->node();
    if (na.index() != nb.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(nb);
            if constexpr (std::is_same_v<T, EmptyNode> || std::is_same_v<T, PointNode>) {
                return true;
            } else if constexpr (std::is_same_v<T, AffineNode> || std::is_same_v<T, ProjectiveNode>) {
                return x.dim == y.dim;
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                return structurally_equal(x.left, y.left) && structurally_equal(x.right, y.right);
            } else if constexpr (std::is_same_v<T, DisjointNode>) {
                if (x.parts.size() != y.parts.size()) return false;
                for (std::size_t i = 0; i < x.parts.size(); ++i) {
                    if (!structurally_equal(x.parts[i], y.parts[i])) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, ComplementNode>) {
                return structurally_equal(x.total, y.total) && structurally_equal(x.closed, y.closed);
            } else if constexpr (std::is_same_v<T, FibrationNode>) {
                return structurally_equal(x.base, y.base) && structurally_equal(x.fiber, y.fiber);
            } else if constexpr (std::is_same_v<T, BlowUpNode>) {
                return x.codim == y.codim && structurally_equal(x.ambient, y.ambient) &&
                       structurally_equal(x.center, y.center);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                return x.factor == y.factor && structurally_equal(x.inner, y.inner);
            } else {
                static_assert(std::is_same_v<T, AtomNode>);
                return x.name == y.name && x.dim == y.dim;
            }
        },
        na);
}

std::string node_kind(const VarietyExpr& e) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmptyNode>) return "empty";
            else if constexpr (std::is_same_v<T, PointNode>) return "pt";
            else if constexpr (std::is_same_v<T, AffineNode>) return "A(" + std::to_string(x.dim) + ")";
            else if constexpr (std::is_same_v<T, ProjectiveNode>) return "P(" + std::to_string(x.dim) + ")";
            else if constexpr (std::is_same_v<T, ProductNode>) return "product";
            else if constexpr (std::is_same_v<T, DisjointNode>) return "disjoint union";
            else if constexpr (std::is_same_v<T, ComplementNode>) return "complement";
            else if constexpr (std::is_same_v<T, FibrationNode>) return "fibration";
            else if constexpr (std::is_same_v<T, BlowUpNode>)
                return "blowup(codim=" + std::to_string(x.codim) + ")";
            else if constexpr (std::is_same_v<T, ScaleNode>)
                return std::to_string(x.factor) + "*(...)";
            else return "atom \"" + x.name + "\"";
        },
        e.node());
}

namespace {

void validate_walk(const ExprPtr& e, std::map<std::string, std::optional<std::int64_t>>& atom_dims,
                   std::vector<Diagnostic>& out) {
    if (!e) {
        out.push_back({"null subexpression", "(null)"});
        return;
    }
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, AffineNode> || std::is_same_v<T, ProjectiveNode>) {
                if (x.dim < 0) out.push_back({"dimension must be non-negative", node_kind(*e)});
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                validate_walk(x.left, atom_dims, out);
                validate_walk(x.right, atom_dims, out);
            } else if constexpr (std::is_same_v<T, DisjointNode>) {
                if (x.parts.empty()) out.push_back({"disjoint union must have at least one part", node_kind(*e)});
                for (const auto& p : x.parts) validate_walk(p, atom_dims, out);
            } else if constexpr (std::is_same_v<T, ComplementNode>) {
                validate_walk(x.total, atom_dims, out);
                validate_walk(x.closed, atom_dims, out);
            } else if constexpr (std::is_same_v<T, FibrationNode>) {
                validate_walk(x.base, atom_dims, out);
                validate_walk(x.fiber, atom_dims, out);
            } else if constexpr (std::is_same_v<T, BlowUpNode>) {
                if (x.codim < 1) out.push_back({"codim must be >= 1", node_kind(*e)});
                validate_walk(x.ambient, atom_dims, out);
                validate_walk(x.center, atom_dims, out);
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                if (x.factor < 1) out.push_back({"scale factor must be >= 1", node_kind(*e)});
                validate_walk(x.inner, atom_dims, out);
            } else if constexpr (std::is_same_v<T, AtomNode>) {
                if (x.name.empty()) {
                    out.push_back({"atom name must be nonempty", node_kind(*e)});
                    return;
                }
                auto [it, inserted] = atom_dims.emplace(x.name, x.dim);
                if (!inserted) {
                    // an omitted dim is compatible with anything
                    if (it->second && x.dim && *it->second != *x.dim) {
                        out.push_back({"atom \"" + x.name + "\" redeclared with a different dim",
                                       node_kind(*e)});
                    } else if (!it->second) {
                        it->second = x.dim;
                    }
                }
            }
        },
        e->node());
}

}  // namespace

std::vector<Diagnostic> validate(const ExprPtr& e) {
    std::vector<Diagnostic> out;
    std::map<std::string, std::optional<std::int64_t>> atom_dims;
    validate_walk(e, atom_dims, out);
    return out;
}

std::vector<Diagnostic> validate_configuration(const PointConfiguration& cfg) {
    std::vector<Diagnostic> out;
    if (cfg.count < 1) out.push_back({"point count must be >= 1", "point configuration"});
    if (cfg.labels) {
        if (static_cast<std::int64_t>(cfg.labels->size()) != cfg.count) {
            out.push_back({"label list length must equal count", "point configuration"});
        }
        std::set<std::string> seen;
        for (const auto& label : *cfg.labels) {
            if (!seen.insert(label).second) {
                out.push_back({"duplicate label \"" + label + "\"", "point configuration"});
            }
        }
    }
    return out;
}

ExprPtr blowup_p3_points(const PointConfiguration& cfg) {
    auto diags = validate_configuration(cfg);
    if (!diags.empty()) throw std::invalid_argument(diags.front().message);
    ExprPtr center = cfg.count == 1 ? point() : scale(cfg.count, point());
    return blow_up(projective(3), std::move(center), 3);
}

}  // namespace motivic
