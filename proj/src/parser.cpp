#include "motivic/parser.hpp"

#include <cctype>
#include <map>
#include <set>

#include "motivic/checked.hpp"
#include "motivic/errors.hpp"

namespace motivic {

namespace {

const std::set<std::string> kKeywords = {"P", "A", "pt", "empty", "L", "blowup",
                                         "fib", "atom", "let", "codim"};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Token::Kind::End: return "end of input";
        case Token::Kind::String: return "string \"" + t.text + "\"";
        default: return "'" + t.text + "'";
    }
}

[[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg + ", got " + describe(t));
}

}  // namespace

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto step = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') step();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            step();
            continue;
        }
        const int tl = line, tc = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t value = 0;
            std::string lexeme;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                try {
                    value = checked_add(checked_mul(value, 10), text[i] - '0');
                } catch (const ArithmeticOverflow&) {
                    throw ParseError(tl, tc, "integer literal out of 64-bit range");
                }
                lexeme.push_back(text[i]);
                step();
            }
            out.push_back({Token::Kind::Int, lexeme, value, tl, tc});
            continue;
        }
        if (is_ident_start(c)) {
            std::string lexeme;
            while (i < text.size() && is_ident_char(text[i])) {
                lexeme.push_back(text[i]);
                step();
            }
            const auto kind =
                kKeywords.count(lexeme) ? Token::Kind::Keyword : Token::Kind::Ident;
            out.push_back({kind, lexeme, 0, tl, tc});
            continue;
        }
        if (c == '"') {
            step();
            std::string contents;
            while (i < text.size() && text[i] != '"' && text[i] != '\n') {
                contents.push_back(text[i]);
                step();
            }
            if (i >= text.size() || text[i] != '"') {
                throw ParseError(tl, tc, "unterminated string");
            }
            step();
            out.push_back({Token::Kind::String, contents, 0, tl, tc});
            continue;
        }
        if (std::string("+-*(),;=").find(c) != std::string::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, c), 0, tl, tc});
            step();
            continue;
        }
        throw ParseError(tl, tc, std::string("unrecognized character '") + c + "'");
    }
    out.push_back({Token::Kind::End, "", 0, line, col});
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ExprPtr parse_expr_to_end() {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::End) fail(peek(), "expected end of input");
        return e;
    }

    ScriptProgram parse_script_program() {
        ScriptProgram program;
        while (peek().kind != Token::Kind::End) {
            if (at_keyword("let")) {
                take();
                const Token name = peek();
                if (name.kind != Token::Kind::Ident) fail(name, "expected a binding name");
                if (env_.count(name.text)) fail(name, "name '" + name.text + "' is already bound");
                take();
                expect_symbol("=");
                ExprPtr value = expr();
                expect_symbol(";");
                env_.emplace(name.text, value);
                program.bindings.emplace_back(name.text, std::move(value));
                continue;
            }
            program.commands.push_back(command());
            expect_symbol(";");
        }
        return program;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() {
        const Token& t = tokens_[pos_];
        if (t.kind != Token::Kind::End) ++pos_;
        return t;
    }
    bool at_symbol(const std::string& s) const {
        return peek().kind == Token::Kind::Symbol && peek().text == s;
    }
    bool at_keyword(const std::string& s) const {
        return peek().kind == Token::Kind::Keyword && peek().text == s;
    }
    bool at_ident(const std::string& s) const {
        return peek().kind == Token::Kind::Ident && peek().text == s;
    }
    Token expect_symbol(const std::string& s) {
        if (!at_symbol(s)) fail(peek(), "expected '" + s + "'");
        return take();
    }
    Token expect_int(const std::string& what) {
        if (peek().kind != Token::Kind::Int) fail(peek(), "expected " + what);
        return take();
    }

    ExprPtr expr() {
        ExprPtr current = term();
        bool joining_union = false;
        while (at_symbol("+") || at_symbol("-")) {
            const bool plus = peek().text == "+";
            take();
            ExprPtr rhs = term();
            if (plus) {
                if (joining_union) {
                    // extend the union built by this loop instead of nesting
                    auto parts = std::get<DisjointNode>(current->node()).parts;
                    parts.push_back(std::move(rhs));
                    current = disjoint(std::move(parts));
                } else {
                    current = disjoint({std::move(current), std::move(rhs)});
                    joining_union = true;
                }
            } else {
                current = complement(std::move(current), std::move(rhs));
                joining_union = false;
            }
        }
        return current;
    }

    ExprPtr term() {
        ExprPtr current = factor();
        while (at_symbol("*")) {
            take();
            current = product(std::move(current), factor());
        }
        return current;
    }

    ExprPtr factor() {
        if (peek().kind == Token::Kind::Int) {
            const Token k = take();
            if (!at_symbol("*")) {
                fail(peek(),
                     "expected '*' after the integer (integers scale varieties, e.g. 8*pt)");
            }
            take();
            return scale(k.value, factor());
        }
        return primary();
    }

    ExprPtr primary() {
        const Token t = peek();
        if (t.kind == Token::Kind::Keyword) {
            if (t.text == "P" || t.text == "A") {
                take();
                expect_symbol("(");
                const Token n = expect_int("a dimension");
                expect_symbol(")");
                return t.text == "P" ? projective(n.value) : affine(n.value);
            }
            if (t.text == "pt") {
                take();
                return point();
            }
            if (t.text == "empty") {
                take();
                return empty_space();
            }
            if (t.text == "blowup") return blowup_primary();
            if (t.text == "fib") {
                take();
                expect_symbol("(");
                ExprPtr base = expr();
                expect_symbol(";");
                ExprPtr fiber = expr();
                expect_symbol(")");
                return fibration(std::move(base), std::move(fiber));
            }
            if (t.text == "atom") return atom_primary();
            if (t.text == "L") {
                fail(t, "L is a class literal, not a variety; classes appear only in outputs");
            }
            fail(t, "expected an expression");
        }
        if (t.kind == Token::Kind::Ident) {
            take();
            const auto it = env_.find(t.text);
            if (it == env_.end()) fail(t, "undefined name '" + t.text + "'");
            return it->second;
        }
        if (at_symbol("(")) {
            take();
            ExprPtr inner = expr();
            expect_symbol(")");
            return inner;
        }
        fail(t, "expected an expression");
    }

    ExprPtr blowup_primary() {
        take();  // 'blowup'
        expect_symbol("(");
        ExprPtr ambient = expr();
        expect_symbol(";");
        ExprPtr center = expr();
        std::optional<std::int64_t> codim;
        if (at_symbol(",")) {
            take();
            if (!at_keyword("codim")) fail(peek(), "expected 'codim'");
            take();
            expect_symbol("=");
            codim = expect_int("a codimension").value;
        }
        const Token close = peek();
        expect_symbol(")");
        if (!codim) {
            const auto* proj = std::get_if<ProjectiveNode>(&ambient->node());
            const bool point_center =
                std::holds_alternative<PointNode>(center->node()) ||
                (std::holds_alternative<ScaleNode>(center->node()) &&
                 std::holds_alternative<PointNode>(
                     std::get<ScaleNode>(center->node()).inner->node()));
            if (!proj || !point_center) {
                fail(close,
                     "codim is required here; it may be omitted only when the ambient is P(n) "
                     "and the center is pt or k*pt");
            }
            codim = proj->dim;
        }
        return blow_up(std::move(ambient), std::move(center), *codim);
    }

    ExprPtr atom_primary() {
        take();  // 'atom'
        expect_symbol("(");
        if (peek().kind != Token::Kind::String) fail(peek(), "expected a quoted atom name");
        const Token name = take();
        std::optional<std::int64_t> dim;
        if (at_symbol(",")) {
            take();
            if (!at_ident("dim")) fail(peek(), "expected 'dim'");
            take();
            expect_symbol("=");
            dim = expect_int("a dimension").value;
        }
        expect_symbol(")");
        return atom(name.text, dim);
    }

    std::int64_t prime_arg() {
        const Token t = expect_int("a prime in [2, 97]");
        try {
            PrimeField field(t.value);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(t.line, t.col, ex.what());
        }
        return t.value;
    }

    Command command() {
        const Token t = peek();
        if (t.kind != Token::Kind::Ident) {
            fail(t,
                 "expected 'let' or a command (normalize, equiv, modl, rational, biratdiff, "
                 "count, verify, demo)");
        }
        if (t.text == "normalize") {
            take();
            return NormalizeCommand{expr()};
        }
        if (t.text == "equiv") {
            take();
            ExprPtr a = expr();
            expect_symbol(",");
            return EquivCommand{std::move(a), expr()};
        }
        if (t.text == "modl") {
            take();
            return ModLCommand{expr()};
        }
        if (t.text == "rational") {
            take();
            ExprPtr e = expr();
            expect_symbol(",");
            if (!at_ident("dim")) fail(peek(), "expected 'dim'");
            take();
            expect_symbol("=");
            return RationalityCommand{std::move(e), expect_int("a dimension").value};
        }
        if (t.text == "biratdiff") {
            take();
            ExprPtr a = expr();
            expect_symbol(",");
            return BiratDiffCommand{std::move(a), expr()};
        }
        if (t.text == "count") {
            take();
            ExprPtr e = expr();
            expect_symbol(",");
            return CountCommand{std::move(e), prime_arg()};
        }
        if (t.text == "verify") {
            take();
            ExprPtr e = expr();
            std::vector<std::int64_t> primes;
            do {
                expect_symbol(",");
                primes.push_back(prime_arg());
            } while (at_symbol(","));
            return VerifyCommand{std::move(e), std::move(primes)};
        }
        if (t.text == "demo") {
            take();
            if (!at_ident("lesieutre")) fail(peek(), "expected 'lesieutre'");
            take();
            const Token m = expect_int("a positive point count");
            if (m.value < 1) {
                throw ParseError(m.line, m.col, "point count must be at least 1");
            }
            return DemoLesieutreCommand{m.value};
        }
        fail(t, "unknown command '" + t.text +
                    "' (expected normalize, equiv, modl, rational, biratdiff, count, verify, or "
                    "demo)");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::map<std::string, ExprPtr> env_;
};

}  // namespace

ExprPtr parse_expression(const std::string& text) {
    return Parser(tokenize(text)).parse_expr_to_end();
}

ScriptProgram parse_script(const std::string& text) {
    return Parser(tokenize(text)).parse_script_program();
}

namespace {

// Precedence levels for printing: union/complement 0, product 1, scale 2,
// primary 3. A child below its context's minimum gets parentheses.
int print_level(const VarietyExpr& e) {
    if (std::holds_alternative<DisjointNode>(e.node()) ||
        std::holds_alternative<ComplementNode>(e.node())) {
        return 0;
    }
    if (std::holds_alternative<ProductNode>(e.node())) return 1;
    if (std::holds_alternative<ScaleNode>(e.node())) return 2;
    return 3;
}

void print_expr(const ExprPtr& e, int min_level, std::string& out) {
    const bool parens = print_level(*e) < min_level;
    if (parens) out += "(";
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, EmptyNode>) {
                out += "empty";
            } else if constexpr (std::is_same_v<T, PointNode>) {
                out += "pt";
            } else if constexpr (std::is_same_v<T, AffineNode>) {
                out += "A(" + std::to_string(x.dim) + ")";
            } else if constexpr (std::is_same_v<T, ProjectiveNode>) {
                out += "P(" + std::to_string(x.dim) + ")";
            } else if constexpr (std::is_same_v<T, ProductNode>) {
                print_expr(x.left, 1, out);
                out += "*";
                print_expr(x.right, 2, out);
            } else if constexpr (std::is_same_v<T, DisjointNode>) {
                for (std::size_t i = 0; i < x.parts.size(); ++i) {
                    if (i > 0) out += " + ";
                    print_expr(x.parts[i], 1, out);
                }
            } else if constexpr (std::is_same_v<T, ComplementNode>) {
                print_expr(x.total, 0, out);
                out += " - ";
                print_expr(x.closed, 1, out);
            } else if constexpr (std::is_same_v<T, FibrationNode>) {
                out += "fib(";
                print_expr(x.base, 0, out);
                out += "; ";
                print_expr(x.fiber, 0, out);
                out += ")";
            } else if constexpr (std::is_same_v<T, BlowUpNode>) {
                out += "blowup(";
                print_expr(x.ambient, 0, out);
                out += "; ";
                print_expr(x.center, 0, out);
                out += ", codim=" + std::to_string(x.codim) + ")";
            } else if constexpr (std::is_same_v<T, ScaleNode>) {
                out += std::to_string(x.factor) + "*";
                print_expr(x.inner, 2, out);
            } else {
                static_assert(std::is_same_v<T, AtomNode>);
                out += "atom(\"" + x.name + "\"";
                if (x.dim) out += ", dim=" + std::to_string(*x.dim);
                out += ")";
            }
        },
        e->node());
    if (parens) out += ")";
}

}  // namespace

std::string to_dsl(const ExprPtr& e) {
    std::string out;
    print_expr(e, 0, out);
    return out;
}

MultiPoly parse_equation(const std::string& text, const std::vector<std::string>& var_names) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < var_names.size(); ++i) index.emplace(var_names[i], i);

    MultiPoly poly(static_cast<std::int64_t>(var_names.size()));
    int line = 1, col = 1;
    std::size_t i = 0;
    auto step = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) step();
    };
    auto read_int = [&]() -> std::int64_t {
        const int tl = line, tc = col;
        std::int64_t value = 0;
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw ParseError(line, col, "expected an integer");
        }
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            try {
                value = checked_add(checked_mul(value, 10), text[i] - '0');
            } catch (const ArithmeticOverflow&) {
                throw ParseError(tl, tc, "integer literal out of 64-bit range");
            }
            step();
        }
        return value;
    };

    skip_space();
    std::int64_t sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        step();
        skip_space();
    }
    for (;;) {
        // one monomial: factors joined by '*', each INT or NAME('^'INT)?
        std::int64_t coeff = sign;
        std::vector<std::int64_t> exps(var_names.size(), 0);
        for (;;) {
            skip_space();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = checked_mul(coeff, read_int());
            } else if (i < text.size() && is_ident_start(text[i])) {
                const int tl = line, tc = col;
                std::string name;
                while (i < text.size() && is_ident_char(text[i])) {
                    name.push_back(text[i]);
                    step();
                }
                const auto it = index.find(name);
                if (it == index.end()) {
                    throw ParseError(tl, tc, "unknown variable '" + name + "'");
                }
                std::int64_t exp = 1;
                skip_space();
                if (i < text.size() && text[i] == '^') {
                    step();
                    skip_space();
                    exp = read_int();
                }
                exps[it->second] = checked_add(exps[it->second], exp);
            } else {
                throw ParseError(line, col, "expected a coefficient or a variable");
            }
            skip_space();
            if (i < text.size() && text[i] == '*') {
                step();
                continue;
            }
            break;
        }
        poly.add_term(std::move(exps), coeff);
        skip_space();
        if (i >= text.size()) break;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            step();
            skip_space();
            continue;
        }
        throw ParseError(line, col,
                         std::string("unexpected character '") + text[i] + "' in equation");
    }
    return poly;
}

}  // namespace motivic
