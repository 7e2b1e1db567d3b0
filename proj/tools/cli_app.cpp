#include "cli_app.hpp"

#include <mder/mder.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace mder::cli {
namespace {

struct Options {
    std::string format = "text";
    std::string out_file;
    std::size_t cap = default_oracle_cap;
    std::string alpha; // decimal, empty when symbolic
    bool identified = false;
    std::string operator_file;

    std::string shape;
    bool oracle = false;

    std::size_t k = 0;
    std::size_t count = 0;
    std::string engine = "auto";

    std::size_t terms = 0;
    std::string sequence_file;
    GuessSpec spec{3, 3, 3, 5};
};

struct Outcome {
    json inputs = json::object();
    json result;
    json diagnostics;
    std::string text;
    int status = exit_ok;
};

// Errors that map to exit status 2.
bool is_usage_error(const std::exception& e) {
    return dynamic_cast<const parse_error*>(&e) || dynamic_cast<const schema_error*>(&e) ||
           dynamic_cast<const unsupported_k*>(&e) || dynamic_cast<const cap_exceeded*>(&e) ||
           dynamic_cast<const std::invalid_argument*>(&e);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Accepts either a bare record or a machine-format envelope wrapping one.
json load_record(const std::string& path) {
    json j = parse_json_text(read_file(path));
    if (j.is_object() && j.contains("command") && j.contains("result")) return j.at("result");
    return j;
}

Integer parse_alpha(const std::string& text) {
    return detail::parse_integer(json(text), "--alpha");
}

std::string shape_label(const MultisetShape& s) { return "A(" + to_string(s) + ")"; }

Outcome cmd_wder(const Options& o) {
    Outcome r;
    const MultisetShape shape = parse_shape(o.shape);
    r.inputs = {{"shape", to_string(shape)}, {"identified", o.identified}, {"oracle", o.oracle}};
    const AlphaPolynomial poly = o.oracle ? enumerate_derangements(shape, o.cap) : weighted_derangement_poly(shape);
    if (o.identified) {
        if (!o.alpha.empty() && parse_alpha(o.alpha) != 1)
            throw parse_error("--identified requires alpha = 1");
        Integer labeled = evaluate(poly, Integer(1));
        Integer q = labeled / shape.factorial_product();
        r.inputs["alpha"] = "1";
        r.result = q.get_str();
        r.text = shape_label(shape) + "(1) / prod k_i! = " + q.get_str();
    } else if (!o.alpha.empty()) {
        const Integer a = parse_alpha(o.alpha);
        r.inputs["alpha"] = a.get_str();
        const Integer v = evaluate(poly, a);
        r.result = v.get_str();
        r.text = shape_label(shape) + "(" + a.get_str() + ") = " + v.get_str();
    } else {
        r.result = to_json(poly);
        r.text = shape_label(shape) + "(a) = " + to_string(poly);
    }
    return r;
}

Outcome cmd_count(const Options& o) {
    Outcome r;
    const MultisetShape shape = parse_shape(o.shape);
    r.inputs = {{"shape", to_string(shape)}, {"identified", o.identified}};
    const Integer labeled = count_derangements(shape);
    const Integer v = o.identified ? Integer(labeled / shape.factorial_product()) : labeled;
    r.result = v.get_str();
    r.text = std::string(o.identified ? "identified" : "labeled") + " derangements of [" + to_string(shape) + "]: " + v.get_str();
    return r;
}

std::optional<RecurrenceOperator> load_operator(const std::string& path) {
    if (path.empty()) return std::nullopt;
    return operator_from_json(load_record(path), path);
}

// F_k(first..last) from the chosen engine.
std::vector<AlphaPolynomial> sequence_values(std::size_t k, std::size_t first, std::size_t last,
                                             const std::string& engine, const std::optional<RecurrenceOperator>& file_op,
                                             std::string& used) {
    if (engine != "auto" && engine != "recurrence" && engine != "direct")
        throw parse_error("unknown engine '" + engine + "'");
    std::optional<RecurrenceOperator> op = file_op;
    if (engine != "direct" && !op && (k == 1 || k == 2)) op = builtin_operator(k);
    if (engine == "recurrence" && !op) builtin_operator(k); // raises unsupported_k
    if (engine == "direct" || !op) {
        used = "direct";
        return fk_direct_range(k, first, last);
    }
    used = file_op ? "operator-file" : "builtin-recurrence";
    const PolySequence seed = initial_conditions(k, op->valid_from + op->order());
    const PolySequence full = last + 1 > seed.end_index() ? extend_sequence(*op, seed, last) : seed;
    return std::vector<AlphaPolynomial>(full.values.begin() + static_cast<std::ptrdiff_t>(first),
                                        full.values.begin() + static_cast<std::ptrdiff_t>(last + 1));
}

Outcome cmd_seq(const Options& o) {
    Outcome r;
    if (o.k < 1) throw parse_error("k must be at least 1");
    if (o.count < 1) throw parse_error("K must be at least 1");
    const auto file_op = load_operator(o.operator_file);
    std::string used;
    const auto values = sequence_values(o.k, 1, o.count, o.engine, file_op, used);
    r.inputs = {{"k", o.k}, {"K", o.count}, {"engine", o.engine}};
    if (!o.operator_file.empty()) r.inputs["operator"] = o.operator_file;
    r.diagnostics = {{"engine_used", used}};
    std::ostringstream text;
    json vals = json::array();
    if (!o.alpha.empty()) {
        const Integer a = parse_alpha(o.alpha);
        r.inputs["alpha"] = a.get_str();
        for (std::size_t i = 0; i < values.size(); ++i) {
            const Integer v = evaluate(values[i], a);
            vals.push_back(v.get_str());
            text << "F_" << o.k << "(" << i + 1 << ")(" << a.get_str() << ") = " << v.get_str() << "\n";
        }
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) {
            vals.push_back(to_json(values[i]));
            text << "F_" << o.k << "(" << i + 1 << ") = " << to_string(values[i]) << "\n";
        }
    }
    r.result = json{{"format", "mder-sequence"}, {"version", sequence_schema_version}, {"k", o.k}, {"start", 1},
                    {"values", std::move(vals)}};
    r.text = text.str() + "# engine: " + used;
    return r;
}

PolySequence load_sequence(const Options& o, json& inputs) {
    if (!o.sequence_file.empty()) {
        inputs["sequence"] = o.sequence_file;
        return sequence_from_json(load_record(o.sequence_file), o.sequence_file);
    }
    if (o.k < 1 || o.terms < 1) throw parse_error("give --sequence FILE or both --k and --terms");
    inputs["k"] = o.k;
    inputs["terms"] = o.terms;
    PolySequence seq;
    seq.k = o.k;
    seq.values = fk_direct_range(o.k, 0, o.terms - 1);
    return seq;
}

Outcome cmd_guess(const Options& o) {
    Outcome r;
    const PolySequence seq = load_sequence(o, r.inputs);
    r.inputs["max_order"] = o.spec.max_order;
    r.inputs["max_deg_n"] = o.spec.max_deg_n;
    r.inputs["max_deg_a"] = o.spec.max_deg_a;
    r.inputs["holdout"] = o.spec.holdout;
    GuessResult g;
    try {
        g = guess_operator(seq, o.spec);
    } catch (const insufficient_terms& e) {
        r.result = nullptr;
        r.diagnostics = {{"status", "insufficient-terms"}, {"message", e.what()}};
        r.text = std::string("insufficient terms: ") + e.what();
        r.status = exit_failure;
        return r;
    }
    r.diagnostics = {{"status", g.found() ? "found" : "not-found"}, {"candidates_tried", g.candidates_tried}};
    if (!g.found()) {
        r.result = nullptr;
        r.text = "no operator found within the bounds (" + std::to_string(g.candidates_tried) + " candidates tried)";
        r.status = exit_failure;
        return r;
    }
    r.diagnostics["order"] = g.order;
    r.diagnostics["deg_n"] = g.deg_n;
    r.diagnostics["deg_a"] = g.deg_a;
    r.diagnostics["kernel_dimension"] = g.kernel_dimension;
    r.result = to_json(*g.op);
    r.text = to_string(*g.op);
    if (g.kernel_dimension > 1) r.text += "\n# ambiguous: kernel dimension " + std::to_string(g.kernel_dimension);
    return r;
}

Outcome cmd_verify(const Options& o) {
    Outcome r;
    if (o.operator_file.empty()) throw parse_error("verify needs --operator FILE");
    const RecurrenceOperator op = *load_operator(o.operator_file);
    r.inputs["operator"] = o.operator_file;
    const PolySequence seq = load_sequence(o, r.inputs);
    const auto bad = first_violation(op, seq);
    const std::size_t from = std::max(seq.start, op.valid_from);
    r.result = {{"passed", !bad.has_value()},
                {"first_failure", bad ? json(*bad) : json(nullptr)},
                {"window", json::array({from, seq.end_index() - 1 - op.order()})}};
    if (bad) {
        r.status = exit_failure;
        r.text = "FAIL: operator does not annihilate the sequence at n = " + std::to_string(*bad);
    } else {
        r.text = "PASS: operator annihilates the sequence for n = " + std::to_string(from) + ".." +
                 std::to_string(seq.end_index() - 1 - op.order());
    }
    return r;
}

Outcome cmd_selftest(const Options& o) {
    Outcome r;
    r.inputs = {{"cap", o.cap}};
    SelftestOptions opt;
    opt.cap = o.cap;
    const auto suites = run_selftest(opt);
    json rows = json::array();
    std::ostringstream text;
    bool all = true;
    for (const auto& s : suites) {
        all = all && s.passed;
        rows.push_back({{"suite", s.name}, {"passed", s.passed}, {"detail", s.detail}, {"millis", s.millis}});
        text << (s.passed ? "PASS  " : "FAIL  ") << s.name << "  (" << s.detail << ", " << static_cast<long>(s.millis)
             << " ms)\n";
    }
    r.result = std::move(rows);
    r.text = text.str() + (all ? "all suites passed" : "some suites FAILED");
    r.status = all ? exit_ok : exit_failure;
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact cycle-weighted enumeration of multiset derangements", "mder"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--out", o.out_file, "Write output to this file instead of stdout");
    app.add_option("--cap", o.cap, "Brute-force oracle bound on the total shape size");
    app.add_option("--alpha", o.alpha, "Evaluate at this integer instead of printing the polynomial");
    app.add_flag("--identified", o.identified, "Divide the alpha = 1 count by prod k_i!");
    app.add_option("--operator", o.operator_file, "Recurrence operator file");

    auto* wder = app.add_subcommand("wder", "Weighted derangement polynomial of a shape");
    wder->add_option("shape", o.shape, "Block sizes, e.g. 2,2,3 or 4^13")->required();
    wder->add_flag("--oracle", o.oracle, "Use brute-force enumeration (bounded by --cap)");

    auto* count = app.add_subcommand("count", "Number of derangements (alpha = 1)");
    count->add_option("shape", o.shape, "Block sizes, e.g. 2,2,3 or 4^13")->required();

    auto* seq = app.add_subcommand("seq", "First K terms F_k(1..K)");
    seq->add_option("k", o.k, "Block size")->required();
    seq->add_option("K", o.count, "Number of terms")->required();
    seq->add_option("--engine", o.engine, "auto, recurrence or direct")
        ->check(CLI::IsMember({"auto", "recurrence", "direct"}));

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "Use F_k(0..terms-1) from the integral formula");
        sub->add_option("--terms", o.terms, "Number of terms for --k");
        sub->add_option("--sequence", o.sequence_file, "Sequence file");
    };
    auto* guess = app.add_subcommand("guess", "Discover a recurrence operator from sequence terms");
    add_source(guess);
    guess->add_option("--max-order", o.spec.max_order, "Largest operator order")->capture_default_str();
    guess->add_option("--max-deg-n", o.spec.max_deg_n, "Largest coefficient degree in n")->capture_default_str();
    guess->add_option("--max-deg-a", o.spec.max_deg_a, "Largest coefficient degree in a")->capture_default_str();
    guess->add_option("--holdout", o.spec.holdout, "Trailing terms reserved for verification")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Check that an operator annihilates a sequence");
    add_source(verify);

    auto* selftest = app.add_subcommand("selftest", "Run the built-in consistency suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "mder: " << e.what() << "\n";
        return exit_usage;
    }

    Outcome r;
    std::string command;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (wder->parsed()) {
            command = "wder";
            r = cmd_wder(o);
        } else if (count->parsed()) {
            command = "count";
            r = cmd_count(o);
        } else if (seq->parsed()) {
            command = "seq";
            r = cmd_seq(o);
        } else if (guess->parsed()) {
            command = "guess";
            r = cmd_guess(o);
        } else if (verify->parsed()) {
            command = "verify";
            r = cmd_verify(o);
        } else if (selftest->parsed()) {
            command = "selftest";
            r = cmd_selftest(o);
        }
    } catch (const std::exception& e) {
        err << "mder " << command << ": " << e.what() << "\n";
        return is_usage_error(e) ? exit_usage : exit_failure;
    }
    const double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::string body;
    if (o.format == "machine") {
        json env = {{"command", command}, {"inputs", r.inputs}, {"result", r.result}, {"timing_ms", millis}};
        if (!r.diagnostics.is_null()) env["diagnostics"] = r.diagnostics;
        body = env.dump(2) + "\n";
    } else {
        std::ostringstream ss;
        ss << r.text << "\n# " << command << " took " << millis << " ms\n";
        body = ss.str();
    }
    if (o.out_file.empty()) {
        out << body;
    } else {
        std::ofstream f(o.out_file);
        if (!f) {
            err << "mder: cannot write '" << o.out_file << "'\n";
            return exit_usage;
        }
        f << body;
    }
    return r.status;
}

} // namespace mder::cli
