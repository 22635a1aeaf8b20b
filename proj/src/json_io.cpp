#include "motivic/json_io.hpp"

#include <fstream>

#include "motivic/checked.hpp"
#include "motivic/parser.hpp"

namespace motivic {

using nlohmann::json;

json lpoly_to_json(const LPolynomial& p) {
    json terms = json::array();
    const auto& coeffs = p.coefficients();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        terms.push_back({{"deg", it->first}, {"c", it->second}});
    }
    return terms;
}

json class_to_json(const MotivicClass& c) {
    json terms = json::array();
    for (const auto& [monomial, poly] : c.terms()) {
        json atoms = json::array();
        for (const auto& [name, exp] : monomial.factors()) {
            atoms.push_back({{"name", name}, {"exp", exp}});
        }
        terms.push_back({{"atoms", std::move(atoms)}, {"coeffs", lpoly_to_json(poly)}});
    }
    return json{{"terms", std::move(terms)}};
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw std::invalid_argument("malformed class JSON: " + what);
}

std::int64_t int_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) {
        malformed(std::string("expected integer field '") + key + "'");
    }
    return j[key].get<std::int64_t>();
}

}  // namespace

MotivicClass class_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        malformed("expected object with a 'terms' array");
    }
    MotivicClass result = MotivicClass::zero();
    for (const auto& term : j["terms"]) {
        if (!term.is_object() || !term.contains("atoms") || !term["atoms"].is_array() ||
            !term.contains("coeffs") || !term["coeffs"].is_array()) {
            malformed("each term needs 'atoms' and 'coeffs' arrays");
        }
        AtomMonomial monomial = AtomMonomial::unit();
        for (const auto& a : term["atoms"]) {
            if (!a.is_object() || !a.contains("name") || !a["name"].is_string()) {
                malformed("each atom needs a string 'name'");
            }
            const std::int64_t exp = int_field(a, "exp");
            if (exp < 1) malformed("atom exponents must be positive");
            const std::string name = a["name"].get<std::string>();
            if (name.empty()) malformed("atom names must be nonempty");
            for (std::int64_t k = 0; k < exp; ++k) {
                monomial = monomial * AtomMonomial::atom(name);
            }
        }
        std::map<std::int64_t, std::int64_t> coeffs;
        for (const auto& c : term["coeffs"]) {
            const std::int64_t deg = int_field(c, "deg");
            const std::int64_t value = int_field(c, "c");
            if (deg < 0) malformed("degrees must be non-negative");
            auto [it, inserted] = coeffs.emplace(deg, value);
            if (!inserted) it->second = checked_add(it->second, value);
        }
        result = result + MotivicClass::from_term(monomial, LPolynomial::from_coefficients(coeffs));
    }
    return result;
}

json report_to_json(const EquivalenceReport& r) {
    json out{{"verdict", r.verdict},
             {"difference", r.difference.to_string()},
             {"difference_class", class_to_json(r.difference)}};
    if (r.note) out["note"] = *r.note;
    return out;
}

json sample_to_json(const CountSample& s) { return json{{"q", s.q}, {"count", s.count}}; }

CountingProblem problem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("equations") || !j.contains("p")) {
        throw std::invalid_argument(
            "malformed counting problem: expected {ambient, equations, p}");
    }
    const json& amb = j["ambient"];
    if (!amb.is_object() || !amb.contains("type") || !amb["type"].is_string()) {
        throw std::invalid_argument("malformed ambient: expected a 'type' string");
    }
    Ambient ambient;
    const std::string type = amb["type"].get<std::string>();
    if (type == "affine") {
        ambient = AffineAmbient{int_field(amb, "dim")};
    } else if (type == "projective") {
        ambient = ProjectiveAmbient{int_field(amb, "dim")};
    } else if (type == "multi_projective") {
        if (!amb.contains("dims") || !amb["dims"].is_array() || amb["dims"].empty()) {
            throw std::invalid_argument("multi_projective ambient needs a nonempty 'dims' array");
        }
        MultiProjectiveAmbient multi;
        for (const auto& d : amb["dims"]) {
            if (!d.is_number_integer()) {
                throw std::invalid_argument("ambient dims must be integers");
            }
            multi.dims.push_back(d.get<std::int64_t>());
        }
        ambient = std::move(multi);
    } else {
        throw std::invalid_argument("unknown ambient type '" + type +
                                    "' (expected affine, projective, or multi_projective)");
    }

    if (!j["p"].is_number_integer()) {
        throw std::invalid_argument("field characteristic 'p' must be an integer");
    }
    PrimeField field(j["p"].get<std::int64_t>());

    if (!j["equations"].is_array()) {
        throw std::invalid_argument("'equations' must be an array of strings");
    }
    const auto names = ambient_variables(ambient);
    std::vector<MultiPoly> equations;
    for (const auto& eq : j["equations"]) {
        if (!eq.is_string()) throw std::invalid_argument("'equations' must be an array of strings");
        equations.push_back(parse_equation(eq.get<std::string>(), names));
    }
    return {std::move(ambient), std::move(equations), field};
}

CountingProblem load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open problem file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& ex) {
        throw std::invalid_argument("problem file is not valid JSON: " + std::string(ex.what()));
    }
    return problem_from_json(j);
}

}  // namespace motivic
