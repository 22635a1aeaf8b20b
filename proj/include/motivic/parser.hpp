#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "motivic/oracle.hpp"
#include "motivic/variety.hpp"

namespace motivic {

struct Token {
    enum class Kind { Int, Ident, String, Keyword, Symbol, End };

    Kind kind;
    std::string text;         // lexeme; for String, the unquoted contents
    std::int64_t value = 0;   // payload for Int
    int line = 1, col = 1;    // 1-based position of the first character
};

/// Splits source text into tokens. Keywords: P A pt empty L blowup fib atom
/// let codim. Symbols: + - * ( ) , ; =. '#' comments to end of line.
/// Throws ParseError on an unrecognized byte, unterminated string, or an
/// integer literal outside 64-bit range.
std::vector<Token> tokenize(const std::string& text);

/// Parses one expression with no name bindings in scope. Throws ParseError.
///
/// Grammar:
///   expr    := term (('+' | '-') term)*        -- '+' disjoint union,
///                                                 '-' scissor complement
///   term    := factor ('*' factor)*            -- product of varieties
///   factor  := INT '*' factor | primary        -- INT*e is e taken INT times
///                                                 (disjoint copies, never a
///                                                 repeated product)
///   primary := 'P' '(' INT ')' | 'A' '(' INT ')' | 'pt' | 'empty'
///            | 'blowup' '(' expr ';' expr (',' 'codim' '=' INT)? ')'
///            | 'fib' '(' expr ';' expr ')'
///            | 'atom' '(' STRING (',' 'dim' '=' INT)? ')'
///            | IDENT | '(' expr ')'
///
/// blowup's codim may be omitted only when the ambient is P(n) and the center
/// is pt or k*pt; it then defaults to n.
ExprPtr parse_expression(const std::string& text);

struct NormalizeCommand {
    ExprPtr expr;
};
struct EquivCommand {
    ExprPtr left, right;
};
struct ModLCommand {
    ExprPtr expr;
};
struct RationalityCommand {
    ExprPtr expr;
    std::int64_t dim;
};
struct BiratDiffCommand {
    ExprPtr left, right;
};
struct CountCommand {
    ExprPtr expr;
    std::int64_t prime;  // in [2, 97]
};
struct VerifyCommand {
    ExprPtr expr;
    std::vector<std::int64_t> primes;  // each in [2, 97]
};
struct DemoLesieutreCommand {
    std::int64_t points;  // >= 1
};

using Command = std::variant<NormalizeCommand, EquivCommand, ModLCommand, RationalityCommand,
                             BiratDiffCommand, CountCommand, VerifyCommand, DemoLesieutreCommand>;

/// A parsed script: bindings in declaration order (names unique, later ones
/// may reference earlier ones only) and commands in source order.
struct ScriptProgram {
    std::vector<std::pair<std::string, ExprPtr>> bindings;
    std::vector<Command> commands;
};

/// Parses a script. Statements end with ';':
///   let NAME = expr;
///   normalize expr;          equiv expr, expr;        modl expr;
///   rational expr, dim=INT;  biratdiff expr, expr;
///   count expr, PRIME;       verify expr, PRIME (, PRIME)*;
///   demo lesieutre INT;
/// Throws ParseError on the first syntax error, undefined name, duplicate
/// binding, or a prime outside [2, 97].
ScriptProgram parse_script(const std::string& text);

/// Pretty-prints an expression in the concrete syntax above; the output
/// re-parses to a structurally identical tree.
std::string to_dsl(const ExprPtr& e);

/// Parses an integer-coefficient polynomial over the named variables, for
/// counting-problem files: monomials joined by '+'/'-', exponents with '^',
/// e.g. "x1*y1 - x2*y0" or "x0^2 + 2*x0*x1 - 3". Throws ParseError; unknown
/// variable names are reported with their position.
MultiPoly parse_equation(const std::string& text, const std::vector<std::string>& var_names);

}  // namespace motivic
