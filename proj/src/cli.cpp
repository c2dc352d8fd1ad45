#include "dsform/cli.hpp"

#include "dsform/checkers.hpp"
#include "dsform/combinatorics.hpp"
#include "dsform/constructions.hpp"
#include "dsform/errors.hpp"
#include "dsform/matrix.hpp"
#include "dsform/oracles.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

namespace dsform::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    bool pass = false;
    Json measured;
    Json bound;
};

class RunReport {
public:
    explicit RunReport(std::string command) : command_(std::move(command)) {}

    void param(std::string const& key, Json value) { params_[key] = std::move(value); }
    void check(std::string name, bool pass, Json measured, Json bound) {
        checks_.push_back({std::move(name), pass, std::move(measured), std::move(bound)});
    }
    void payload(std::string const& key, Json value) { payload_[key] = std::move(value); }

    bool all_passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](Check const& c) { return c.pass; });
    }

    void write(std::ostream& out, bool json, double wall_ms) const {
        if (json) {
            Json doc;
            doc["command"] = command_;
            doc["params"] = params_.is_null() ? Json::object() : params_;
            Json checks = Json::array();
            for (auto const& c : checks_)
                checks.push_back({{"name", c.name}, {"pass", c.pass}, {"measured", c.measured}, {"bound", c.bound}});
            doc["checks"] = std::move(checks);
            for (auto const& [key, value] : payload_.items()) doc[key] = value;
            doc["wall_time_ms"] = wall_ms;
            out << doc.dump(2) << '\n';
            return;
        }
        out << command_ << '\n';
        for (auto const& [key, value] : params_.items()) out << "  " << key << " = " << scalar(value) << '\n';
        for (auto const& c : checks_) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << scalar(c.measured);
            if (!c.bound.is_null()) out << " (bound " << scalar(c.bound) << ')';
            out << '\n';
        }
        for (auto const& [key, value] : payload_.items()) {
            std::string const text = scalar(value);
            if (text.find('\n') != std::string::npos)
                out << key << ":\n" << text << (text.back() == '\n' ? "" : "\n");
            else
                out << key << ": " << text << '\n';
        }
        out << "wall_time_ms: " << std::fixed << std::setprecision(3) << wall_ms << '\n';
    }

private:
    static std::string scalar(Json const& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

    std::string command_;
    Json params_;
    std::vector<Check> checks_;
    Json payload_;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(std::string const& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(std::string const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

/// `(ab)^k`, a file path, or literal sequence text.
PatternSequence resolve_sequence_pattern(std::string const& item) {
    static std::regex const alternation(R"(\s*\(ab\)\^(\d+)\s*)");
    std::smatch match;
    if (std::regex_match(item, match, alternation)) {
        std::size_t const k = std::stoul(match[1]);
        if (k == 0) throw UsageError("(ab)^k needs k >= 1");
        return PatternSequence::alternation(2 * k);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(item, ec)) return PatternSequence(parse_sequence(read_input(item)));
    return PatternSequence(parse_sequence(item));
}

/// `Ra,b`, a file path, or literal rows separated by '/'.
MatrixPattern resolve_matrix_pattern(std::string const& item) {
    static std::regex const ones(R"(\s*R(\d+),(\d+)\s*)");
    std::smatch match;
    if (std::regex_match(item, match, ones)) {
        std::size_t const a = std::stoul(match[1]);
        std::size_t const b = std::stoul(match[2]);
        if (a == 0 || b == 0) throw UsageError("Ra,b needs a, b >= 1");
        return all_ones(a, b);
    }
    std::error_code ec;
    if (std::filesystem::is_regular_file(item, ec)) return MatrixPattern(parse_matrix(read_input(item)));
    std::string rows = item;
    std::replace(rows.begin(), rows.end(), '/', '\n');
    return MatrixPattern(parse_matrix(rows));
}

std::string render_witness(Witness const& w) {
    return std::visit([](auto const& value) { return render(value); }, w);
}

template <class T>
T required(std::optional<T> const& value, char const* flag) {
    if (!value) throw UsageError(std::string("missing required flag --") + flag);
    return *value;
}

struct Flags {
    std::optional<std::size_t> n, m, s, r, q, x, t, j, a, b;
    std::optional<double> c;
    std::optional<std::string> pattern;
    std::optional<std::uint64_t> node_limit;
    unsigned threads = 1;
    bool json = false;
    bool override_caps = false;
    bool compare_oracle = false;
    std::string output;
    std::string trace_output;
};

void add_size_flag(CLI::App* app, std::string const& name, std::optional<std::size_t>& target,
                   std::string const& help) {
    app->add_option("--" + name, target, help);
}

SearchOptions search_options(Flags const& f) {
    SearchOptions opts;
    opts.override_caps = f.override_caps;
    opts.threads = f.threads;
    opts.node_limit = f.node_limit.value_or(0);
    return opts;
}

// construct ---------------------------------------------------------------

void construct_formation(Flags const& f, RunReport& report) {
    std::size_t const r = required(f.r, "r");
    std::size_t const q = f.q.value_or(r);
    std::size_t x = 0;
    std::size_t t = 0;
    // Either explicit --x --t, or --n --s [--c] through the parameter rule.
    bool const chosen = !f.x && !f.t && f.n && f.s;
    if (chosen) {
        double const c = f.c.value_or(1.0);
        report.param("n", *f.n);
        report.param("s", *f.s);
        report.param("c", c);
        ConstructionParams const p = choose_params(*f.n, *f.s, c, r, q);
        x = p.x;
        t = p.t;
    } else {
        x = required(f.x, "x");
        t = required(f.t, "t");
    }
    report.param("r", r);
    report.param("q", q);
    report.param("x", x);
    report.param("t", t);
    Construction built = build_formation_witness(r, q, x, t);
    Sequence const& seq = built.sequence;

    std::size_t const expected_len = q * t * binomial(x, r);
    report.check("length", seq.size() == expected_len, seq.size(), expected_len);
    report.check("sparse:" + std::to_string(q), is_sparse(seq, q), is_sparse(seq, q), true);
    if (t >= 2) report.check("not-sparse:" + std::to_string(q + 1), !is_sparse(seq, q + 1), is_sparse(seq, q + 1), false);
    std::size_t const budget = letter_budget(r, q, x);
    report.check("letters", built.trace.letter_count <= budget && seq.alphabet_size() == built.trace.letter_count,
                 built.trace.letter_count, budget);
    std::size_t const ceiling = formation_ceiling(r, x, t);
    std::size_t const formation = max_formation_length(seq, r);
    report.check("formation:" + std::to_string(r), formation < ceiling, formation, ceiling);
    std::size_t const meet = troop_hypergraph(built.trace).max_pairwise_intersection();
    report.check("troop-intersection", meet <= r - 1, meet, r - 1);

    Sequence witness = seq;
    if (chosen) {
        report.check("formation-ceiling<=s", ceiling <= *f.s, ceiling, *f.s);
        witness = pad_to_alphabet(seq, *f.n);
        report.check("padded-letters", witness.alphabet_size() == *f.n, witness.alphabet_size(), *f.n);
        std::size_t const padded_formation = max_formation_length(witness, r);
        report.check("padded-formation:" + std::to_string(r), padded_formation == formation, padded_formation,
                     formation);
    }
    report.payload("witness", render(witness));
    report.payload("trace", render(built.trace));
    if (!f.output.empty()) write_output(f.output, render(witness));
    if (!f.trace_output.empty()) write_output(f.trace_output, render(built.trace));
}

void construct_ds_sparse(Flags const& f, RunReport& report) {
    std::size_t const n = required(f.n, "n");
    std::size_t const s = required(f.s, "s");
    std::size_t const j = f.j.value_or(2);
    report.param("n", n);
    report.param("s", s);
    report.param("j", j);
    Sequence const seq = build_ds_sparse_witness(n, s, j);
    report.check("sparse:" + std::to_string(j), is_sparse(seq, j), is_sparse(seq, j), true);
    std::size_t const alt = max_alternation(seq);
    report.check("ds:" + std::to_string(s), is_ds(seq, s), alt, s + 1);
    report.check("letters", seq.alphabet_size() == n, seq.alphabet_size(), n);
    report.payload("length", seq.size());
    report.payload("witness", render(seq));
    if (!f.output.empty()) write_output(f.output, render(seq));
}

void construct_block(Flags const& f, RunReport& report) {
    std::size_t const n = required(f.n, "n");
    std::size_t const s = required(f.s, "s");
    report.param("n", n);
    report.param("s", s);
    BlockedSequence const bseq = build_block_witness(n, s);
    Sequence const flat = flatten(bseq);

    report.check("blocks", bseq.block_count() == n, bseq.block_count(), n);
    std::size_t deletions = 0;
    for (std::size_t k = 0; k < std::min(s, n); ++k) deletions = std::max(deletions, n - bseq.block(k).size());
    report.check("deletions-per-block", deletions <= 1, deletions, 1);
    if (s <= n) report.check("min-length", flat.size() + n >= n * s, flat.size(), n * s - n);
    report.check("ds:" + std::to_string(s), is_ds(flat, s), max_alternation(flat), s + 1);
    report.payload("length", flat.size());
    report.payload("witness", render(bseq));
    if (!f.output.empty()) write_output(f.output, render(bseq));
}

// verify ------------------------------------------------------------------

std::vector<std::string> split(std::string const& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::size_t parse_count(std::string const& text, std::string const& check) {
    std::size_t pos = 0;
    unsigned long value = 0;
    try {
        value = std::stoul(text, &pos);
    } catch (std::exception const&) {
        pos = 0;
    }
    if (pos == 0 || pos != text.size()) throw UsageError("bad number '" + text + "' in check '" + check + "'");
    return value;
}

void run_verify(std::string const& file, std::vector<std::string> const& checks, RunReport& report) {
    ParsedText const parsed = parse_text(read_input(file));
    Sequence const seq = std::holds_alternative<Sequence>(parsed) ? std::get<Sequence>(parsed)
                                                                  : flatten(std::get<BlockedSequence>(parsed));
    report.param("file", file);
    report.param("length", seq.size());
    report.param("letters", seq.alphabet_size());
    if (checks.empty()) throw UsageError("verify needs at least one check");

    for (auto const& item : checks) {
        auto const parts = split(item, ':');
        std::string const& kind = parts[0];
        if (kind == "sparse" && parts.size() == 2) {
            std::size_t const j = parse_count(parts[1], item);
            if (j == 0) throw UsageError("sparse:j needs j >= 1");
            report.check(item, is_sparse(seq, j), is_sparse(seq, j), true);
        } else if (kind == "ds" && parts.size() == 2) {
            std::size_t const s = parse_count(parts[1], item);
            report.check(item, is_ds(seq, s), max_alternation(seq), s + 1);
        } else if (kind == "formation" && parts.size() == 3) {
            std::size_t const r = parse_count(parts[1], item);
            std::size_t const s = parse_count(parts[2], item);
            if (r == 0) throw UsageError("formation:r:s needs r >= 1");
            std::size_t const measured = max_formation_length(seq, r);
            report.check(item, measured < s, measured, s - 1);
        } else if (kind == "pattern" && parts.size() >= 2) {
            std::string const pattern_text = item.substr(std::string("pattern:").size());
            PatternSequence const u = resolve_sequence_pattern(pattern_text);
            bool const contains = contains_pattern(seq, u);
            report.check(item, !contains, contains ? "contains" : "avoids", "avoids");
        } else if (kind == "lambda-prime" && parts.size() == 2) {
            std::size_t const s = parse_count(parts[1], item);
            if (!std::holds_alternative<BlockedSequence>(parsed))
                throw UsageError("lambda-prime check needs a blocked sequence");
            std::size_t const measured = max_pair_cooccurrence(std::get<BlockedSequence>(parsed));
            report.check(item, measured <= s, measured, s);
        } else {
            throw UsageError("unknown check '" + item + "'");
        }
    }
}

// oracle ------------------------------------------------------------------

void run_oracle(std::string const& function, Flags const& f, RunReport& report) {
    SearchOptions const opts = search_options(f);
    ExtremalResult result;
    // Re-check of the witness through the checkers, independent of the search.
    bool admissible = false;

    if (function == "lambda") {
        std::size_t const n = required(f.n, "n"), s = required(f.s, "s"), j = f.j.value_or(2);
        report.param("n", n);
        report.param("s", s);
        report.param("j", j);
        result = oracle_lambda(n, s, j, opts);
        auto const& w = std::get<Sequence>(result.witness);
        admissible = is_sparse(w, j) && is_ds(w, s) && w.alphabet_size() <= n;
    } else if (function == "formation") {
        std::size_t const n = required(f.n, "n"), r = required(f.r, "r"), s = required(f.s, "s");
        std::size_t const j = f.j.value_or(r);
        report.param("n", n);
        report.param("r", r);
        report.param("s", s);
        report.param("j", j);
        result = oracle_formation(n, r, s, j, opts);
        auto const& w = std::get<Sequence>(result.witness);
        admissible = is_sparse(w, j) && max_formation_length(w, r) < s && w.alphabet_size() <= n;
    } else if (function == "pattern") {
        std::size_t const n = required(f.n, "n"), j = f.j.value_or(2);
        PatternSequence const u = resolve_sequence_pattern(required(f.pattern, "pattern"));
        report.param("pattern", render(u.sequence()));
        report.param("j", j);
        report.param("n", n);
        result = oracle_pattern(u, j, n, opts);
        auto const& w = std::get<Sequence>(result.witness);
        admissible = is_sparse(w, j) && !contains_pattern(w, u) && w.alphabet_size() <= n;
    } else if (function == "lambda-blocks") {
        std::size_t const n = required(f.n, "n"), s = required(f.s, "s"), m = required(f.m, "m");
        report.param("n", n);
        report.param("s", s);
        report.param("m", m);
        result = oracle_lambda_blocks(n, s, m, opts);
        auto const& w = std::get<BlockedSequence>(result.witness);
        admissible = w.block_count() <= m && is_ds(flatten(w), s) && flatten(w).alphabet_size() <= n;
    } else if (function == "lambda-prime") {
        std::size_t const n = required(f.n, "n"), s = required(f.s, "s"), m = required(f.m, "m");
        report.param("n", n);
        report.param("s", s);
        report.param("m", m);
        result = oracle_lambda_prime(n, s, m, opts);
        auto const& w = std::get<BlockedSequence>(result.witness);
        admissible = w.block_count() <= m && max_pair_cooccurrence(w) <= s && w.max_letter() <= n;
    } else if (function == "ex-matrix") {
        std::size_t const n = required(f.n, "n"), m = required(f.m, "m");
        std::string const item = required(f.pattern, "pattern");
        MatrixPattern const p = resolve_matrix_pattern(item);
        report.param("n", n);
        report.param("m", m);
        report.param("pattern", item);
        result = oracle_ex_matrix(n, m, p, opts);
        auto const& w = std::get<ZeroOneMatrix>(result.witness);
        admissible = !matrix_contains(w, p) && w.ones_count() == result.value;
    } else {
        throw UsageError("unknown oracle function '" + function + "'");
    }

    std::size_t const witness_size = std::visit(
        [](auto const& w) -> std::size_t {
            using W = std::decay_t<decltype(w)>;
            if constexpr (std::is_same_v<W, ZeroOneMatrix>)
                return w.ones_count();
            else if constexpr (std::is_same_v<W, BlockedSequence>)
                return w.length();
            else
                return w.size();
        },
        result.witness);
    report.check("witness-admissible", admissible && witness_size == result.value, witness_size, result.value);
    report.payload("value", result.value);
    report.payload("witness", render_witness(result.witness));
    report.payload("nodes_explored", result.nodes_explored);
    report.payload("exhausted", result.exhausted);
    if (f.override_caps) report.payload("estimated_nodes", result.estimated_nodes);
}

// bound -------------------------------------------------------------------

void run_bound(std::string const& kind, Flags const& f, RunReport& report) {
    SearchOptions const opts = search_options(f);
    if (kind == "kst") {
        std::size_t const n = required(f.n, "n"), m = required(f.m, "m");
        std::size_t const a = required(f.a, "a"), b = required(f.b, "b");
        report.param("n", n);
        report.param("m", m);
        report.param("a", a);
        report.param("b", b);
        double const bound = kst_bound(n, m, a, b);
        report.payload("bound", bound);
        if (f.compare_oracle) {
            ExtremalResult const ex = oracle_ex_matrix(n, m, all_ones(a, b), opts);
            report.check("ex(n,m,R_{a,b}) <= kst", static_cast<double>(ex.value) <= bound, ex.value, bound);
        }
    } else if (kind == "ds-ceiling") {
        std::size_t const n = required(f.n, "n"), s = required(f.s, "s");
        report.param("n", n);
        report.param("s", s);
        std::uint64_t const bound = ds_length_ceiling(n, s);
        report.payload("bound", bound);
        if (f.compare_oracle) {
            ExtremalResult const lam = oracle_lambda(n, s, 2, opts);
            report.check("lambda_s(n) <= s C(n,2) + 1", lam.value <= bound, lam.value, bound);
        }
    } else if (kind == "formation-ceiling") {
        std::size_t const n = required(f.n, "n"), r = required(f.r, "r"), s = required(f.s, "s");
        report.param("n", n);
        report.param("r", r);
        report.param("s", s);
        std::uint64_t const bound = formation_length_ceiling(n, r, s);
        report.payload("bound", bound);
        if (f.compare_oracle) {
            std::size_t const j = f.j.value_or(r);
            ExtremalResult const fr = oracle_formation(n, r, s, j, opts);
            report.check("F_{r,s,j}(n) <= s n^r", fr.value <= bound && fr.exhausted, fr.value, bound);
        }
    } else {
        throw UsageError("unknown bound '" + kind + "'");
    }
}

// convert -----------------------------------------------------------------

void run_convert(std::string const& direction, std::string const& file, Flags const& f, RunReport& report,
                 std::ostream& out) {
    std::string const text = read_input(file);
    std::string converted;
    if (direction == "blocks-to-matrix") {
        converted = render(blocked_to_matrix(parse_blocked(text)));
    } else if (direction == "matrix-to-blocks") {
        converted = render(matrix_to_blocked(parse_matrix(text)));
    } else {
        throw UsageError("unknown conversion '" + direction + "'");
    }
    report.param("direction", direction);
    report.param("file", file);
    if (!f.output.empty()) {
        write_output(f.output, converted);
        report.payload("output", f.output);
    } else if (!f.json) {
        out << converted << '\n';
        return;
    }
    report.payload("result", converted);
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Constructions, checkers and exact oracles for sparse formation-avoiding sequences"};
    app.require_subcommand(1);
    Flags f;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", f.json, "Emit a JSON report");
    };
    auto search_flags = [&](CLI::App* sub) {
        sub->add_option("--threads", f.threads, "Worker threads for the search")->check(CLI::Range(1u, 256u));
        sub->add_flag("--override-caps", f.override_caps, "Allow instances beyond the default caps");
        sub->add_option("--node-limit", f.node_limit, "Stop after this many search nodes");
    };

    std::string kind;
    std::string file;
    std::vector<std::string> checks;

    auto* construct = app.add_subcommand("construct", "Build and re-verify a lower-bound witness");
    construct->add_option("kind", kind, "formation | ds-sparse | block")->required();
    for (auto& [name, target] : {std::pair<char const*, std::optional<std::size_t>*>{"n", &f.n},
                                  {"s", &f.s}, {"r", &f.r}, {"q", &f.q}, {"x", &f.x}, {"t", &f.t}, {"j", &f.j}})
        add_size_flag(construct, name, *target, "construction parameter");
    construct->add_option("--c", f.c, "Constant in the parameter rule for formation --n --s (default 1)");
    construct->add_option("-o,--output", f.output, "Write the witness to this file");
    construct->add_option("--trace-output", f.trace_output, "Write the construction trace to this file");
    common(construct);

    auto* verify = app.add_subcommand("verify", "Check a sequence file against predicates");
    verify->add_option("file", file, "Sequence file ('-' for stdin)")->required();
    verify->add_option("checks", checks,
                       "sparse:j ds:s formation:r:s pattern:<(ab)^k|file|text> lambda-prime:s");
    common(verify);

    auto* oracle = app.add_subcommand("oracle", "Compute an extremal value by exhaustive search");
    oracle->add_option("function", kind, "lambda | formation | pattern | lambda-blocks | lambda-prime | ex-matrix")
        ->required();
    add_size_flag(oracle, "n", f.n, "letters / rows");
    add_size_flag(oracle, "m", f.m, "blocks / columns");
    add_size_flag(oracle, "s", f.s, "order / formation length");
    add_size_flag(oracle, "r", f.r, "formation width");
    add_size_flag(oracle, "j", f.j, "sparsity");
    oracle->add_option("--pattern", f.pattern, "(ab)^k, Ra,b, a file, or literal text");
    search_flags(oracle);
    common(oracle);

    auto* bound = app.add_subcommand("bound", "Evaluate an upper bound");
    bound->add_option("kind", kind, "kst | ds-ceiling | formation-ceiling")->required();
    for (auto& [name, target] : {std::pair<char const*, std::optional<std::size_t>*>{"n", &f.n},
                                  {"m", &f.m}, {"a", &f.a}, {"b", &f.b}, {"s", &f.s}, {"r", &f.r}, {"j", &f.j}})
        add_size_flag(bound, name, *target, "bound parameter");
    bound->add_flag("--compare-oracle", f.compare_oracle, "Also run the matching oracle and compare");
    search_flags(bound);
    common(bound);

    auto* convert = app.add_subcommand("convert", "Convert between blocked sequences and incidence matrices");
    convert->add_option("direction", kind, "blocks-to-matrix | matrix-to-blocks")->required();
    convert->add_option("file", file, "Input file ('-' for stdin)")->required();
    convert->add_option("-o,--output", f.output, "Write the result to this file");
    common(convert);

    std::vector<char const*> argv{"dsform"};
    for (auto const& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const&) {
        out << app.help();
        return kAllPassed;
    } catch (CLI::ParseError const& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    auto const started = std::chrono::steady_clock::now();
    CLI::App* active = app.get_subcommands().front();
    RunReport report(active->get_name() + " " + kind);
    try {
        if (active == construct) {
            if (kind == "formation")
                construct_formation(f, report);
            else if (kind == "ds-sparse")
                construct_ds_sparse(f, report);
            else if (kind == "block")
                construct_block(f, report);
            else
                throw UsageError("unknown construction '" + kind + "'");
        } else if (active == verify) {
            report = RunReport("verify");
            run_verify(file, checks, report);
        } else if (active == oracle) {
            run_oracle(kind, f, report);
        } else if (active == bound) {
            run_bound(kind, f, report);
        } else if (active == convert) {
            run_convert(kind, file, f, report, out);
            if (f.output.empty() && !f.json) return kAllPassed;
        }
    } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (ParseError const& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (Infeasible const& e) {
        err << "infeasible: " << e.what() << '\n';
        return kUsageError;
    } catch (CapExceeded const& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kUsageError;
    } catch (std::invalid_argument const& e) {
        err << "invalid parameters: " << e.what() << '\n';
        return kUsageError;
    }

    double const wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    report.write(out, f.json, wall_ms);
    return report.all_passed() ? kAllPassed : kCheckFailed;
}

}  // namespace dsform::cli
