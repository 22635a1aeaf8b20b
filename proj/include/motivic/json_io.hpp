#pragma once

#include <string>

#include <json.hpp>

#include "motivic/equivalence.hpp"
#include "motivic/motivic_class.hpp"
#include "motivic/oracle.hpp"

namespace motivic {

/// [{deg, c}] in descending degree, matching the text form's term order.
nlohmann::json lpoly_to_json(const LPolynomial& p);

/// {terms: [{atoms: [{name, exp}], coeffs: [{deg, c}]}]}; the unit monomial
/// has an empty atoms array. This is the stable machine form of a class.
nlohmann::json class_to_json(const MotivicClass& c);

/// Inverse of class_to_json; accepts any term/degree order and canonicalizes.
/// Throws std::invalid_argument on malformed structure.
MotivicClass class_from_json(const nlohmann::json& j);

/// {verdict, difference, note?}; difference in both text and machine form.
nlohmann::json report_to_json(const EquivalenceReport& r);

/// {q, count}
nlohmann::json sample_to_json(const CountSample& s);

/// Counting problem from {ambient, equations, p}, where ambient is one of
///   {"type": "affine", "dim": n}
///   {"type": "projective", "dim": n}
///   {"type": "multi_projective", "dims": [n1, n2, ...]}
/// and equations are polynomial strings in the ambient variables (blocks are
/// named x, y, z, w, v, u in order; coordinates x0, x1, ...). Throws
/// std::invalid_argument on malformed structure and ParseError on a bad
/// equation string.
CountingProblem problem_from_json(const nlohmann::json& j);

/// Reads and parses a counting-problem JSON file. Throws std::invalid_argument
/// when the file cannot be read or is not valid JSON.
CountingProblem load_problem_file(const std::string& path);

}  // namespace motivic
