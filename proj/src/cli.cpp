#include "motivic/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "motivic/equivalence.hpp"
#include "motivic/errors.hpp"
#include "motivic/json_io.hpp"
#include "motivic/normalize.hpp"
#include "motivic/oracle.hpp"
#include "motivic/parser.hpp"

namespace motivic {

namespace {

using nlohmann::json;

struct Ctx {
    bool json_mode = false;
    std::int64_t budget = kDefaultBudget;
};

/// One executed command: the machine record, the plain rendering of the same
/// data, stderr diagnostics, and the process exit code.
struct CommandResult {
    json record;
    std::string plain;
    std::vector<std::string> diagnostics;
    int code = kExitOk;
};

json make_record(const std::string& command, const std::string& input, const std::string& status,
                 json result, const std::vector<std::string>& diagnostics) {
    return json{{"command", command},
                {"input", input},
                {"status", status},
                {"result", std::move(result)},
                {"diagnostics", diagnostics}};
}

CommandResult success(const std::string& command, const std::string& input, json result,
                      std::string plain) {
    return {make_record(command, input, "ok", std::move(result), {}), std::move(plain), {}, kExitOk};
}

CommandResult failure(const std::string& command, const std::string& input, int code,
                      std::vector<std::string> diagnostics, json result = nullptr,
                      std::string plain = "") {
    CommandResult r;
    r.record = make_record(command, input, "error", std::move(result), diagnostics);
    r.plain = std::move(plain);
    r.diagnostics = std::move(diagnostics);
    r.code = code;
    return r;
}

/// Maps a thrown error to the command's outcome. Bad input values are usage
/// errors; bad text is a parse error; everything the engine cannot finish is
/// a computation error.
template <typename Fn>
CommandResult guarded(const std::string& command, const std::string& input, Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& ex) {
        return failure(command, input, kExitParse, {ex.what()});
    } catch (const std::invalid_argument& ex) {
        return failure(command, input, kExitUsage, {ex.what()});
    } catch (const std::exception& ex) {
        return failure(command, input, kExitComputation, {ex.what()});
    }
}

/// Structural validation gate shared by every command that takes expressions.
std::optional<CommandResult> gate(const std::string& command, const std::string& input,
                                  std::initializer_list<ExprPtr> exprs) {
    std::vector<std::string> diags;
    for (const auto& e : exprs) {
        for (const auto& d : validate(e)) diags.push_back(d.message + " in " + d.where);
    }
    if (diags.empty()) return std::nullopt;
    return failure(command, input, kExitParse, std::move(diags));
}

json class_result(const MotivicClass& c) {
    return json{{"text", c.to_string()}, {"class", class_to_json(c)}};
}

CommandResult exec_normalize(Ctx&, const std::string& input, const ExprPtr& e) {
    if (auto g = gate("normalize", input, {e})) return *g;
    const MotivicClass c = normalize_or_throw(e);
    return success("normalize", input, class_result(c), c.to_string() + "\n");
}

CommandResult exec_equiv(Ctx&, const std::string& input, const ExprPtr& a, const ExprPtr& b) {
    if (auto g = gate("equiv", input, {a, b})) return *g;
    const EquivalenceReport report = l_equivalent(normalize_or_throw(a), normalize_or_throw(b));
    std::ostringstream plain;
    plain << "verdict: " << (report.verdict ? "true" : "false") << "\n"
          << "difference: " << report.difference.to_string() << "\n";
    if (report.note) plain << "note: " << *report.note << "\n";
    return success("equiv", input, report_to_json(report), plain.str());
}

CommandResult exec_modl(Ctx&, const std::string& input, const ExprPtr& e) {
    if (auto g = gate("modl", input, {e})) return *g;
    const MotivicClass c = stable_birational_class(normalize_or_throw(e));
    return success("modl", input, class_result(c), c.to_string() + "\n");
}

CommandResult exec_rational(Ctx&, const std::string& input, const ExprPtr& e, std::int64_t dim) {
    if (auto g = gate("rational", input, {e})) return *g;
    const auto witness = rationality_witness(normalize_or_throw(e), dim);
    if (!witness) {
        return success("rational", input, json{{"witness", nullptr}}, "witness: none\n");
    }
    json result{{"witness", witness->to_string()}, {"witness_class", class_to_json(*witness)}};
    std::ostringstream plain;
    plain << "witness: " << witness->to_string() << "\n";
    if (const auto combo = projective_combination(*witness, dim - 2);
        combo && !combo->parts.empty()) {
        result["shape"] = combo->to_string();
        plain << "shape: " << combo->to_string()
              << " (non-negative combination of projective classes of dimension <= "
              << dim - 2 << ")\n";
    }
    return success("rational", input, std::move(result), plain.str());
}

CommandResult exec_biratdiff(Ctx&, const std::string& input, const ExprPtr& a, const ExprPtr& b) {
    if (auto g = gate("biratdiff", input, {a, b})) return *g;
    const auto m = birational_difference(normalize_or_throw(a), normalize_or_throw(b));
    if (!m) {
        return success("biratdiff", input, json{{"witness", nullptr}},
                       "witness: none (difference is not divisible by L)\n");
    }
    return success("biratdiff", input,
                   json{{"witness", m->to_string()}, {"witness_class", class_to_json(*m)}},
                   "witness: " + m->to_string() + "\n");
}

CommandResult exec_count(Ctx& ctx, const std::string& input, const ExprPtr& e, std::int64_t p) {
    if (auto g = gate("count", input, {e})) return *g;
    const CountSample s = count_expression(e, PrimeField(p), CountOptions{ctx.budget});
    return success("count", input, sample_to_json(s),
                   "count over F_" + std::to_string(s.q) + ": " + std::to_string(s.count) + "\n");
}

CommandResult exec_verify(Ctx& ctx, const std::string& input, const ExprPtr& e,
                          const std::vector<std::int64_t>& primes) {
    if (auto g = gate("verify", input, {e})) return *g;
    std::vector<CountSample> samples;
    std::ostringstream plain;
    json sample_list = json::array();
    for (const std::int64_t p : primes) {
        const CountSample s = count_expression(e, PrimeField(p), CountOptions{ctx.budget});
        samples.push_back(s);
        sample_list.push_back(sample_to_json(s));
        plain << "count over F_" << s.q << ": " << s.count << "\n";
    }
    const LPolynomial fit = fit_polynomial(samples);
    const MotivicClass cls = normalize_or_throw(e);
    // the counts above succeeded, so e has no atoms and the class is a polynomial
    const LPolynomial poly = *cls.as_lpoly();
    const bool match = fit == poly;
    plain << "fit: " << fit.to_string() << "\n"
          << "class: " << poly.to_string() << "\n"
          << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
    json result{{"samples", std::move(sample_list)},
                {"fit", fit.to_string()},
                {"fit_coeffs", lpoly_to_json(fit)},
                {"class", poly.to_string()},
                {"verdict", match ? "MATCH" : "MISMATCH"}};
    if (match) return success("verify", input, std::move(result), plain.str());
    return failure("verify", input, kExitMismatch,
                   {"verification mismatch: oracle fit " + fit.to_string() +
                    " differs from normalized class " + poly.to_string()},
                   std::move(result), plain.str());
}

CommandResult exec_demo(Ctx& ctx, std::int64_t points) {
    const std::string input = "lesieutre, points=" + std::to_string(points);
    // two configurations differing only in bookkeeping: distinct label sets
    PointConfiguration cfg_a{points, std::vector<std::string>{}};
    PointConfiguration cfg_b{points, std::vector<std::string>{}};
    for (std::int64_t i = 1; i <= points; ++i) {
        cfg_a.labels->push_back("a" + std::to_string(i));
        cfg_b.labels->push_back("b" + std::to_string(i));
    }
    const ExprPtr expr_a = blowup_p3_points(cfg_a);
    const ExprPtr expr_b = blowup_p3_points(cfg_b);
    const MotivicClass class_a = normalize_or_throw(expr_a);
    const MotivicClass class_b = normalize_or_throw(expr_b);
    const LPolynomial poly = *class_a.as_lpoly();

    bool agree = structurally_equal(expr_a, expr_b) && class_a == class_b;
    std::vector<std::string> disagreements;
    if (!agree) disagreements.push_back("the two configurations produced different classes");

    json sample_list = json::array();
    std::ostringstream counts_plain;
    for (const std::int64_t q : {2, 3}) {
        // different center choices pick different rational points; the counts
        // must not care
        const CountSample first =
            count_expression(expr_a, PrimeField(q), {ctx.budget, CenterChoice::LexFirst});
        const CountSample last =
            count_expression(expr_b, PrimeField(q), {ctx.budget, CenterChoice::LexLast});
        const bool centers_agree = first == last;
        const bool matches_class = first.count == poly.eval(q);
        if (!centers_agree) {
            disagreements.push_back("center choices disagree over F_" + std::to_string(q));
        }
        if (!matches_class) {
            disagreements.push_back("count over F_" + std::to_string(q) +
                                    " does not match the class");
        }
        agree = agree && centers_agree && matches_class;
        sample_list.push_back({{"q", q},
                               {"count", first.count},
                               {"center_choices_agree", centers_agree},
                               {"matches_class", matches_class}});
        counts_plain << "count over F_" << q << ": " << first.count
                     << (centers_agree ? " (both center choices)" : " (CENTER CHOICES DISAGREE)")
                     << (matches_class ? ", matches class" : ", DOES NOT MATCH CLASS") << "\n";
    }

    const MotivicClass mod_l = stable_birational_class(class_a);
    const auto witness = rationality_witness(class_a, 3);
    const auto shape = witness ? projective_combination(*witness, 1) : std::nullopt;

    std::ostringstream plain;
    plain << "class: " << class_a.to_string() << "\n"
          << "configurations agree: " << (agree ? "true" : "false") << "\n"
          << "mod L: " << mod_l.to_string() << "\n";
    plain << "rationality witness (d=3): "
          << (witness ? witness->to_string() : std::string("none"));
    if (shape && !shape->parts.empty()) plain << " = " << shape->to_string();
    plain << "\n" << counts_plain.str();

    json result{{"class", class_a.to_string()},
                {"class_terms", class_to_json(class_a)},
                {"configurations_agree", agree},
                {"mod_l", mod_l.to_string()},
                {"witness", witness ? json(witness->to_string()) : json(nullptr)},
                {"witness_shape", shape ? json(shape->to_string()) : json(nullptr)},
                {"samples", std::move(sample_list)}};
    if (agree) return success("demo lesieutre", input, std::move(result), plain.str());
    return failure("demo lesieutre", input, kExitMismatch, std::move(disagreements),
                   std::move(result), plain.str());
}

CommandResult exec_countfile(Ctx& ctx, const std::string& path) {
    const CountingProblem problem = load_problem_file(path);
    const CountSample s = count_points(problem, ctx.budget);
    return success("countfile", path, sample_to_json(s),
                   "count over F_" + std::to_string(s.q) + ": " + std::to_string(s.count) + "\n");
}

CommandResult run_script_command(Ctx& ctx, const Command& command) {
    return std::visit(
        [&](const auto& c) -> CommandResult {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, NormalizeCommand>) {
                const std::string in = to_dsl(c.expr);
                return guarded("normalize", in, [&] { return exec_normalize(ctx, in, c.expr); });
            } else if constexpr (std::is_same_v<T, EquivCommand>) {
                const std::string in = to_dsl(c.left) + ", " + to_dsl(c.right);
                return guarded("equiv", in, [&] { return exec_equiv(ctx, in, c.left, c.right); });
            } else if constexpr (std::is_same_v<T, ModLCommand>) {
                const std::string in = to_dsl(c.expr);
                return guarded("modl", in, [&] { return exec_modl(ctx, in, c.expr); });
            } else if constexpr (std::is_same_v<T, RationalityCommand>) {
                const std::string in = to_dsl(c.expr) + ", dim=" + std::to_string(c.dim);
                return guarded("rational", in,
                               [&] { return exec_rational(ctx, in, c.expr, c.dim); });
            } else if constexpr (std::is_same_v<T, BiratDiffCommand>) {
                const std::string in = to_dsl(c.left) + ", " + to_dsl(c.right);
                return guarded("biratdiff", in,
                               [&] { return exec_biratdiff(ctx, in, c.left, c.right); });
            } else if constexpr (std::is_same_v<T, CountCommand>) {
                const std::string in = to_dsl(c.expr) + ", p=" + std::to_string(c.prime);
                return guarded("count", in, [&] { return exec_count(ctx, in, c.expr, c.prime); });
            } else if constexpr (std::is_same_v<T, VerifyCommand>) {
                std::string plist;
                for (std::size_t i = 0; i < c.primes.size(); ++i) {
                    plist += (i ? "," : "") + std::to_string(c.primes[i]);
                }
                const std::string in = to_dsl(c.expr) + ", primes=" + plist;
                return guarded("verify", in,
                               [&] { return exec_verify(ctx, in, c.expr, c.primes); });
            } else {
                static_assert(std::is_same_v<T, DemoLesieutreCommand>);
                return guarded("demo lesieutre", "points=" + std::to_string(c.points),
                               [&] { return exec_demo(ctx, c.points); });
            }
        },
        command);
}

CommandResult exec_run(Ctx& ctx, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open script file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const ScriptProgram program = parse_script(buffer.str());

    json records = json::array();
    std::ostringstream plain;
    std::vector<std::string> diagnostics;
    int code = kExitOk;
    bool first = true;
    for (const Command& command : program.commands) {
        CommandResult r = run_script_command(ctx, command);
        if (!first) plain << "\n";
        first = false;
        plain << "## " << r.record["command"].get<std::string>() << " "
              << r.record["input"].get<std::string>() << "\n"
              << r.plain;
        records.push_back(std::move(r.record));
        for (auto& d : r.diagnostics) diagnostics.push_back(std::move(d));
        if (r.code != kExitOk) {
            code = r.code;
            break;  // a failing command aborts the rest of the script
        }
    }
    CommandResult out;
    out.record = make_record("run", path, code == kExitOk ? "ok" : "error", std::move(records),
                             diagnostics);
    out.plain = plain.str();
    out.diagnostics = std::move(diagnostics);
    out.code = code;
    return out;
}

void deliver(const Ctx& ctx, const CommandResult& result, std::ostream& out, std::ostream& err) {
    if (ctx.json_mode) {
        out << result.record.dump(2) << "\n";
    } else {
        out << result.plain;
    }
    for (const auto& d : result.diagnostics) err << "error: " << d << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Ctx ctx;
    if (const char* env = std::getenv("MOTIVIC_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) {
            err << "error: MOTIVIC_BUDGET must be a positive integer, got '" << env << "'\n";
            return kExitUsage;
        }
        ctx.budget = v;
    }

    CLI::App app{"symbolic calculator and point-counting verifier for classes of varieties"};
    app.name("motivic");
    app.fallthrough();
    std::int64_t seed = 0;
    app.add_flag("--json", ctx.json_mode, "emit machine-readable JSON records");
    app.add_option("--budget", ctx.budget, "enumeration cap in candidate tuples")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "reserved; every run is deterministic already");
    app.require_subcommand(1);

    std::string norm_text;
    auto* sc_norm = app.add_subcommand("normalize", "rewrite an expression to its canonical class");
    sc_norm->add_option("expr", norm_text, "variety expression")->required();

    std::string equiv_left, equiv_right;
    auto* sc_equiv = app.add_subcommand("equiv", "decide L-equivalence of two expressions");
    sc_equiv->add_option("left", equiv_left, "first expression")->required();
    sc_equiv->add_option("right", equiv_right, "second expression")->required();

    std::string modl_text;
    auto* sc_modl = app.add_subcommand("modl", "stable-birational class (set L = 0)");
    sc_modl->add_option("expr", modl_text, "variety expression")->required();

    std::string rat_text;
    std::int64_t rat_dim = 0;
    auto* sc_rational =
        app.add_subcommand("rational", "witness M with class = [P^d] + L*M, if divisible");
    sc_rational->add_option("expr", rat_text, "variety expression")->required();
    sc_rational->add_option("--dim", rat_dim, "dimension d")
        ->required()
        ->check(CLI::NonNegativeNumber);

    std::string birat_left, birat_right;
    auto* sc_birat =
        app.add_subcommand("biratdiff", "witness M with a - b = L*M, if divisible");
    sc_birat->add_option("left", birat_left, "first expression")->required();
    sc_birat->add_option("right", birat_right, "second expression")->required();

    std::string count_text;
    std::int64_t count_p = 0;
    auto* sc_count = app.add_subcommand("count", "brute-force point count over F_p");
    sc_count->add_option("expr", count_text, "countable expression")->required();
    sc_count->add_option("--p", count_p, "prime in [2, 97]")->required();

    std::string verify_text;
    std::vector<std::int64_t> verify_primes;
    auto* sc_verify = app.add_subcommand(
        "verify", "count over several primes, fit the polynomial, compare with the class");
    sc_verify->add_option("expr", verify_text, "countable expression")->required();
    sc_verify->add_option("--primes", verify_primes, "comma-separated primes in [2, 97]")
        ->required()
        ->delimiter(',');

    auto* sc_demo = app.add_subcommand("demo", "built-in demonstrations");
    sc_demo->require_subcommand(1);
    std::int64_t demo_points = 0;
    auto* sc_lesi = sc_demo->add_subcommand(
        "lesieutre", "blow-up of P^3 at m points: class, invariants, oracle check");
    sc_lesi->add_option("--points", demo_points, "number of blown-up points")
        ->required()
        ->check(CLI::PositiveNumber);

    std::string script_path;
    auto* sc_run = app.add_subcommand("run", "execute a .mot script");
    sc_run->add_option("script", script_path, "script file")->required();

    std::string problem_path;
    auto* sc_countfile =
        app.add_subcommand("countfile", "count points of a JSON counting problem");
    sc_countfile->add_option("problem", problem_path, "problem JSON file")->required();

    try {
        // CLI11 consumes a reversed, mutable argument vector
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    CommandResult result;
    if (sc_norm->parsed()) {
        result = guarded("normalize", norm_text, [&] {
            return exec_normalize(ctx, norm_text, parse_expression(norm_text));
        });
    } else if (sc_equiv->parsed()) {
        const std::string in = equiv_left + ", " + equiv_right;
        result = guarded("equiv", in, [&] {
            return exec_equiv(ctx, in, parse_expression(equiv_left),
                              parse_expression(equiv_right));
        });
    } else if (sc_modl->parsed()) {
        result = guarded("modl", modl_text, [&] {
            return exec_modl(ctx, modl_text, parse_expression(modl_text));
        });
    } else if (sc_rational->parsed()) {
        result = guarded("rational", rat_text, [&] {
            return exec_rational(ctx, rat_text, parse_expression(rat_text), rat_dim);
        });
    } else if (sc_birat->parsed()) {
        const std::string in = birat_left + ", " + birat_right;
        result = guarded("biratdiff", in, [&] {
            return exec_biratdiff(ctx, in, parse_expression(birat_left),
                                  parse_expression(birat_right));
        });
    } else if (sc_count->parsed()) {
        result = guarded("count", count_text, [&] {
            return exec_count(ctx, count_text, parse_expression(count_text), count_p);
        });
    } else if (sc_verify->parsed()) {
        result = guarded("verify", verify_text, [&] {
            return exec_verify(ctx, verify_text, parse_expression(verify_text), verify_primes);
        });
    } else if (sc_demo->parsed()) {
        result = guarded("demo lesieutre", "points=" + std::to_string(demo_points),
                         [&] { return exec_demo(ctx, demo_points); });
    } else if (sc_run->parsed()) {
        result = guarded("run", script_path, [&] { return exec_run(ctx, script_path); });
    } else {
        result = guarded("countfile", problem_path,
                         [&] { return exec_countfile(ctx, problem_path); });
    }
    deliver(ctx, result, out, err);
    return result.code;
}

}  // namespace motivic
