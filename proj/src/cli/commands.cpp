#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "render.hpp"
#include "tribokit/analytic.hpp"
#include "tribokit/cli.hpp"
#include "tribokit/genfunc.hpp"
#include "tribokit/identities.hpp"
#include "tribokit/oeis.hpp"
#include "tribokit/seqcore.hpp"
#include "tribokit/tribomatrix.hpp"

#ifndef TRIBOKIT_DEFAULT_FIXTURE_DIR
#define TRIBOKIT_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace tribokit::cli {

namespace {

/// Bad arguments or a request outside a strategy's domain; exit status 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

SequenceKind require_kind(const std::string& text) {
    const auto kind = parse_kind(text);
    if (!kind) throw UsageError("unknown sequence \"" + text + "\" (expected T, S or C)");
    return *kind;
}

Index parse_index(const std::string& text, std::string_view what) {
    Index v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(std::string(what) + " must be an integer, got \"" + text + "\"");
    }
    return v;
}

IntPolynomial parse_coefficients(const std::string& text, std::string_view what) {
    std::vector<Integer> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || mpz_set_str(coeffs.emplace_back().get_mpz_t(),
                                        item[0] == '+' ? item.c_str() + 1 : item.c_str(), 10) != 0) {
            throw UsageError(std::string(what) + ": bad coefficient list \"" + text + "\"");
        }
    }
    return IntPolynomial(std::move(coeffs));
}

template <typename F>
auto best_of(int reps, F&& f) {
    using clock = std::chrono::steady_clock;
    double best = 0.0;
    decltype(f()) value{};
    for (int r = 0; r < reps; ++r) {
        const auto t0 = clock::now();
        value = f();
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        best = (r == 0) ? ms : std::min(best, ms);
    }
    return std::pair{best, std::move(value)};
}

// Flags collected by CLI11 before dispatch.
struct Args {
    std::string format;
    std::string config;

    std::string eval_kind, eval_lo, eval_hi, strategy = "recurrence";
    std::optional<int> precision;

    std::string verify_id;
    std::optional<Index> n_min, n_max, m_min, m_max;

    std::vector<std::string> expand_pos;
    std::string num, den;

    std::string matrix_n;

    std::optional<int> roots_precision;

    std::string cc_kind;
    std::vector<std::string> cc_pos;
    bool fetch = false;
    std::optional<std::size_t> rows;
    std::string cc_id;

    std::string bench_kind, bench_n;
    int reps = 3;
};

int cmd_eval(const Args& a, const CliConfig& cfg, OutputFormat fmt, Environment& env) {
    const SequenceKind kind = require_kind(a.eval_kind);
    const Index lo = parse_index(a.eval_lo, "lo");
    const Index hi = parse_index(a.eval_hi, "hi");
    if (lo > hi) throw UsageError("eval: lo must not exceed hi");
    if (fmt == OutputFormat::BFile && lo < 0) throw UsageError("bfile output needs lo >= 0");

    std::vector<Term> terms;
    if (a.strategy == "recurrence") {
        terms = sequence_range(kind, lo, hi);
    } else if (a.strategy == "matrix") {
        if (lo < 0) throw UsageError("matrix strategy requires lo >= 0 (no negative powers of A)");
        const Matrix3 step = tribomatrix();
        Matrix3 power = mat_pow(lo);
        for (Index n = lo; n <= hi; ++n) {
            switch (kind) {
                case SequenceKind::Tribonacci: terms.push_back({n, power(2, 0)}); break;
                case SequenceKind::GeneralizedLucas: terms.push_back({n, power.trace()}); break;
                case SequenceKind::MinorSum: terms.push_back({n, minor_sum_of(power).total}); break;
            }
            if (n != hi) power = power * step;
        }
    } else if (a.strategy == "binet") {
        if (kind == SequenceKind::Tribonacci) {
            throw UsageError("binet strategy supports S and C only");
        }
        const int precision = a.precision.value_or(cfg.precision);
        if (precision < kMinPrecision) throw UsageError("precision must be at least 15");
        const Index cap = binet_cap(precision);
        if (std::max(std::llabs(lo), std::llabs(hi)) > cap) {
            throw UsageError("binet strategy requires |n| <= " + std::to_string(cap) +
                             " at precision " + std::to_string(precision));
        }
        const RootSet roots = char_roots(precision);
        for (Index n = lo; n <= hi; ++n) terms.push_back({n, binet_round(kind, n, roots)});
    } else {
        throw UsageError("unknown strategy \"" + a.strategy + "\"");
    }
    render_terms(env.out, fmt, kind, a.strategy, terms);
    return kExitOk;
}

int cmd_verify(const Args& a, const CliConfig& cfg, OutputFormat fmt, Environment& env) {
    if (fmt == OutputFormat::BFile) throw UsageError("verify does not support bfile output");
    VerifyRange range = cfg.default_range;
    if (a.n_min) range.n.lo = *a.n_min;
    if (a.n_max) range.n.hi = *a.n_max;
    if (a.m_min) range.m.lo = *a.m_min;
    if (a.m_max) range.m.hi = *a.m_max;
    if (range.n.lo > range.n.hi || range.m.lo > range.m.hi) {
        throw UsageError("verify: empty range (min > max)");
    }

    std::vector<VerificationReport> reports;
    if (a.verify_id == "all") {
        reports = verify_all(range);
    } else if (a.verify_id == "BOUNDARY") {
        reports.push_back(boundary_consistency());
    } else if (const IdentityRecord* record = find_identity(a.verify_id)) {
        reports.push_back(verify(*record, range));
    } else {
        throw UsageError("unknown identity \"" + a.verify_id + "\"");
    }
    render_reports(env.out, fmt, reports);
    const bool ok = std::all_of(reports.begin(), reports.end(),
                                [](const auto& r) { return r.verified(); });
    return ok ? kExitOk : kExitFailed;
}

int cmd_expand(const Args& a, OutputFormat fmt, Environment& env) {
    RationalOGF ogf;
    std::string count_text;
    const bool explicit_ogf = !a.num.empty() || !a.den.empty();
    if (explicit_ogf) {
        if (a.num.empty() || a.den.empty()) throw UsageError("expand: --num and --den go together");
        if (a.expand_pos.size() != 1) throw UsageError("expand: expected COUNT after --num/--den");
        ogf = {parse_coefficients(a.num, "--num"), parse_coefficients(a.den, "--den")};
        count_text = a.expand_pos[0];
    } else {
        if (a.expand_pos.size() != 2) throw UsageError("expand: expected OGF COUNT");
        const auto builtin = parse_builtin_ogf(a.expand_pos[0]);
        if (!builtin) throw UsageError("unknown OGF \"" + a.expand_pos[0] + "\" (S, C or CEven)");
        ogf = builtin_ogf(*builtin);
        count_text = a.expand_pos[1];
    }
    const Index count = parse_index(count_text, "count");
    if (count < 1) throw UsageError("expand: count must be at least 1");
    render_expansion(env.out, fmt, ogf, expand(ogf, static_cast<std::size_t>(count)));
    return kExitOk;
}

int cmd_matrix(const Args& a, OutputFormat fmt, Environment& env) {
    const Index n = parse_index(a.matrix_n, "n");
    if (n < 0) throw UsageError("matrix: n must be non-negative");
    const Matrix3 m = mat_pow(n);
    render_matrix(env.out, fmt, n, m, minor_sum_of(m));
    return kExitOk;
}

int cmd_roots(const Args& a, const CliConfig& cfg, OutputFormat fmt, Environment& env) {
    const int precision = a.roots_precision.value_or(cfg.precision);
    if (precision < kMinPrecision) throw UsageError("roots: precision must be at least 15");
    const RootSet roots = char_roots(precision);
    render_roots(env.out, fmt, roots, vieta_check(roots));
    return kExitOk;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

int cmd_crosscheck(const Args& a, const CliConfig& cfg, OutputFormat fmt, Environment& env) {
    const SequenceKind kind = require_kind(a.cc_kind);
    std::size_t rows = a.rows.value_or(50);
    std::string id = a.cc_id;
    oeis::BFile bfile;

    if (a.fetch) {
        if (a.cc_pos.size() > 1) throw UsageError("crosscheck --fetch takes at most ROWS");
        if (!a.cc_pos.empty()) rows = static_cast<std::size_t>(parse_index(a.cc_pos[0], "rows"));
        if (id.empty()) id = std::string(oeis::sequence_id(kind));
        const oeis::Transport transport = env.transport ? env.transport : oeis::http_transport(cfg.oeis_endpoint);
        bfile = oeis::fetch_bfile(id, transport);
    } else {
        if (a.cc_pos.size() > 2) throw UsageError("crosscheck: expected [FIXTURE] [ROWS]");
        std::string path;
        if (a.cc_pos.empty()) {
            path = cfg.fixture_dir + "/" + oeis::bfile_name(oeis::sequence_id(kind));
        } else {
            path = a.cc_pos[0];
        }
        if (a.cc_pos.size() == 2) rows = static_cast<std::size_t>(parse_index(a.cc_pos[1], "rows"));
        if (id.empty()) {
            // b001644.txt names its entry; anything else is taken as the kind's entry.
            static const std::regex bname(R"(b(\d{6})\.txt$)");
            std::smatch match;
            const std::string base = path.substr(path.find_last_of('/') + 1);
            id = std::regex_match(base, match, bname) ? "A" + match[1].str()
                                                      : std::string(oeis::sequence_id(kind));
        }
        bfile = oeis::parse_bfile(read_file(path), id);
    }
    const auto report = oeis::crosscheck(kind, bfile, rows);
    render_crosscheck(env.out, fmt, kind, report);
    return report.ok() ? kExitOk : kExitFailed;
}

int cmd_bench(const Args& a, const CliConfig& cfg, OutputFormat fmt, Environment& env) {
    const SequenceKind kind = require_kind(a.bench_kind);
    if (kind == SequenceKind::Tribonacci) throw UsageError("bench supports S and C only");
    const Index n = parse_index(a.bench_n, "n");
    if (n < 0) throw UsageError("bench: n must be non-negative");
    if (a.reps < 1) throw UsageError("bench: repetitions must be at least 1");
    const int precision = a.precision.value_or(cfg.precision);
    if (precision < kMinPrecision) throw UsageError("precision must be at least 15");

    BenchResult result{kind, n, a.reps, {}, false};
    auto [rec_ms, rec_value] = best_of(a.reps, [&] { return term(kind, n); });
    result.rows.push_back({"recurrence", rec_ms, rec_value, ""});

    auto [mat_ms, mat_value] = best_of(a.reps, [&] {
        return kind == SequenceKind::GeneralizedLucas ? trace_pow(n) : minor_sum(n).total;
    });
    result.rows.push_back({"matrix", mat_ms, mat_value, ""});
    result.exact_agreement = rec_value == mat_value;

    const RootSet roots = char_roots(precision);
    BenchRow binet{"binet", 0.0, std::nullopt, ""};
    try {
        auto [ms, value] = best_of(a.reps, [&] { return binet_round(kind, n, roots); });
        const BinetValue detail = binet_evaluate(kind, n, roots);
        binet = {"binet", ms, value, "error bound " + detail.error_bound.str(3)};
    } catch (const PrecisionExhausted& e) {
        binet.note = std::string("bound exceeded: ") + e.what();
    }
    result.rows.push_back(std::move(binet));

    render_bench(env.out, fmt, result);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, Environment& env) {
    CLI::App app{"Exact evaluation and identity checking for the Tribonacci family", "tribokit"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--format", a.format, "Output format")
        ->check(CLI::IsMember({"plain", "json", "csv", "bfile"}));
    app.add_option("--config", a.config, "Config file (default: $TRIBOKIT_CONFIG)");

    auto* eval = app.add_subcommand("eval", "Evaluate T, S or C over [lo, hi]");
    eval->add_option("kind", a.eval_kind, "T, S or C")->required();
    eval->add_option("lo", a.eval_lo)->required();
    eval->add_option("hi", a.eval_hi)->required();
    eval->add_option("--strategy", a.strategy, "recurrence, matrix or binet")
        ->check(CLI::IsMember({"recurrence", "matrix", "binet"}));
    eval->add_option("--precision", a.precision, "Decimal digits for binet");

    auto* ver = app.add_subcommand("verify", "Verify an identity (or all) over an index box");
    ver->add_option("id", a.verify_id, "Identity id, BOUNDARY, or all")->required();
    ver->add_option("--n-min", a.n_min);
    ver->add_option("--n-max", a.n_max);
    ver->add_option("--m-min", a.m_min);
    ver->add_option("--m-max", a.m_max);

    auto* exp = app.add_subcommand("expand", "Expand a rational generating function");
    exp->add_option("args", a.expand_pos, "OGF COUNT, or COUNT with --num/--den");
    exp->add_option("--num", a.num, "Numerator coefficients, ascending, comma separated");
    exp->add_option("--den", a.den, "Denominator coefficients, constant term 1");

    auto* mat = app.add_subcommand("matrix", "Show A^n with its trace and principal minors");
    mat->add_option("n", a.matrix_n)->required();

    auto* roots = app.add_subcommand("roots", "Roots of x^3 - x^2 - x - 1 and Vieta residuals");
    roots->add_option("precision", a.roots_precision, "Decimal digits (>= 15)");

    auto* cc = app.add_subcommand("crosscheck", "Compare a sequence with an OEIS b-file");
    cc->add_option("kind", a.cc_kind, "T, S or C")->required();
    cc->add_option("args", a.cc_pos, "[FIXTURE] [ROWS]");
    cc->add_flag("--fetch", a.fetch, "Retrieve the b-file over the network");
    cc->add_option("--rows", a.rows, "Rows to compare (default 50)");
    cc->add_option("--id", a.cc_id, "OEIS id of the b-file (default: from file name or kind)");

    auto* bench = app.add_subcommand("bench", "Time recurrence, matrix and binet strategies");
    bench->add_option("kind", a.bench_kind, "S or C")->required();
    bench->add_option("n", a.bench_n)->required();
    bench->add_option("repetitions", a.reps, "Repetitions; the minimum is reported");
    bench->add_option("--precision", a.precision, "Decimal digits for binet");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, env.out, env.err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        CliConfig cfg;
        cfg.fixture_dir = TRIBOKIT_DEFAULT_FIXTURE_DIR;
        std::string config_path = a.config;
        if (config_path.empty() && env.getenv) config_path = env.getenv(kConfigEnvVar).value_or("");
        if (!config_path.empty()) cfg = load_config_file(config_path, std::move(cfg));
        const OutputFormat fmt = a.format.empty() ? cfg.output_format : *parse_format(a.format);

        if (eval->parsed()) return cmd_eval(a, cfg, fmt, env);
        if (ver->parsed()) return cmd_verify(a, cfg, fmt, env);
        if (exp->parsed()) return cmd_expand(a, fmt, env);
        if (mat->parsed()) return cmd_matrix(a, fmt, env);
        if (roots->parsed()) return cmd_roots(a, cfg, fmt, env);
        if (cc->parsed()) return cmd_crosscheck(a, cfg, fmt, env);
        if (bench->parsed()) return cmd_bench(a, cfg, fmt, env);
    } catch (const std::exception& e) {
        env.err << "tribokit: error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace tribokit::cli
