#include "render.hpp"

#include <iomanip>

#include <json.hpp>

namespace tribokit::cli {

using nlohmann::json;

namespace {

constexpr std::size_t kPlainCounterexampleLimit = 5;
constexpr std::size_t kPlainDigitLimit = 40;

std::string abbreviated(const Integer& v) {
    std::string s = to_decimal(v);
    const std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
    if (digits <= kPlainDigitLimit) return s;
    return s.substr(0, 12) + "... (" + std::to_string(digits) + " digits)";
}

json matrix_json(const Matrix3& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        rows.push_back({to_decimal(m(i, 0)), to_decimal(m(i, 1)), to_decimal(m(i, 2))});
    }
    return rows;
}

json complex_json(const Complex& z, int digits) {
    return {{"re", z.re.str(digits)}, {"im", z.im.str(digits)}};
}

std::string complex_plain(const Complex& z, int digits) {
    const bool neg = z.im < Real(0L, z.im.bits());
    return z.re.str(digits) + (neg ? " - " : " + ") + abs(z.im).str(digits) + "i";
}

}  // namespace

void render_terms(std::ostream& os, OutputFormat fmt, SequenceKind kind, std::string_view strategy,
                  const std::vector<Term>& terms) {
    switch (fmt) {
        case OutputFormat::Plain:
            for (const auto& t : terms) os << short_name(kind) << '(' << t.index << ") = " << t.value << '\n';
            break;
        case OutputFormat::Csv:
            os << "n,value\n";
            for (const auto& t : terms) os << t.index << ',' << t.value << '\n';
            break;
        case OutputFormat::BFile:
            for (const auto& t : terms) os << t.index << ' ' << t.value << '\n';
            break;
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& t : terms) arr.push_back({{"n", t.index}, {"value", to_decimal(t.value)}});
            os << json{{"sequence", short_name(kind)}, {"strategy", strategy}, {"terms", arr}}.dump(2)
               << '\n';
            break;
        }
    }
}

void render_reports(std::ostream& os, OutputFormat fmt,
                    const std::vector<VerificationReport>& reports) {
    switch (fmt) {
        case OutputFormat::Plain:
        case OutputFormat::BFile: {
            std::size_t failed = 0;
            for (const auto& r : reports) {
                os << std::left << std::setw(10) << r.id << "  " << std::setw(30) << r.range << "  "
                   << std::right << std::setw(6) << r.cases_checked << " cases  ";
                if (r.verified()) {
                    os << "OK\n";
                    continue;
                }
                ++failed;
                os << "FAIL (" << r.counterexamples.size() << " counterexamples)\n";
                const std::size_t shown = std::min(r.counterexamples.size(), kPlainCounterexampleLimit);
                for (std::size_t i = 0; i < shown; ++i) {
                    const auto& c = r.counterexamples[i];
                    os << "    n=" << c.n << " m=" << c.m << " form=" << c.form
                       << ": lhs=" << abbreviated(c.lhs) << " rhs=" << abbreviated(c.rhs) << '\n';
                }
                if (shown < r.counterexamples.size()) {
                    os << "    ... " << r.counterexamples.size() - shown << " more\n";
                }
            }
            os << reports.size() - failed << '/' << reports.size() << " identities verified\n";
            break;
        }
        case OutputFormat::Csv:
            os << "id,range,cases_checked,counterexamples\n";
            for (const auto& r : reports) {
                os << r.id << ",\"" << r.range << "\"," << r.cases_checked << ','
                   << r.counterexamples.size() << '\n';
            }
            break;
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& r : reports) {
                json ces = json::array();
                for (const auto& c : r.counterexamples) {
                    ces.push_back({{"n", c.n}, {"m", c.m}, {"form", c.form},
                                   {"lhs", to_decimal(c.lhs)}, {"rhs", to_decimal(c.rhs)}});
                }
                arr.push_back({{"id", r.id}, {"range", r.range}, {"cases_checked", r.cases_checked},
                               {"verified", r.verified()}, {"counterexamples", ces}});
            }
            os << arr.dump(2) << '\n';
            break;
        }
    }
}

void render_expansion(std::ostream& os, OutputFormat fmt, const RationalOGF& ogf,
                      const std::vector<Integer>& coefficients) {
    switch (fmt) {
        case OutputFormat::Plain:
            for (std::size_t i = 0; i < coefficients.size(); ++i) {
                os << (i ? ", " : "") << coefficients[i];
            }
            os << '\n';
            break;
        case OutputFormat::Csv:
            os << "n,value\n";
            for (std::size_t i = 0; i < coefficients.size(); ++i) os << i << ',' << coefficients[i] << '\n';
            break;
        case OutputFormat::BFile:
            for (std::size_t i = 0; i < coefficients.size(); ++i) os << i << ' ' << coefficients[i] << '\n';
            break;
        case OutputFormat::Json: {
            auto strings = [](const std::vector<Integer>& v) {
                json arr = json::array();
                for (const auto& x : v) arr.push_back(to_decimal(x));
                return arr;
            };
            os << json{{"numerator", strings(ogf.numerator.coefficients())},
                       {"denominator", strings(ogf.denominator.coefficients())},
                       {"coefficients", strings(coefficients)}}
                      .dump(2)
               << '\n';
            break;
        }
    }
}

void render_matrix(std::ostream& os, OutputFormat fmt, Index n, const Matrix3& m,
                   const MinorSumReport& minors) {
    switch (fmt) {
        case OutputFormat::Plain:
        case OutputFormat::BFile:
            os << "A^" << n << " =\n";
            for (std::size_t i = 0; i < 3; ++i) {
                os << "  [" << m(i, 0) << ", " << m(i, 1) << ", " << m(i, 2) << "]\n";
            }
            os << "trace = " << m.trace() << '\n';
            os << "principal minors = " << minors.minor_12 << ", " << minors.minor_13 << ", "
               << minors.minor_23 << '\n';
            os << "minor sum = " << minors.total << '\n';
            break;
        case OutputFormat::Csv:
            os << "quantity,value\n";
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) os << 'a' << i + 1 << j + 1 << ',' << m(i, j) << '\n';
            }
            os << "trace," << m.trace() << '\n'
               << "minor_12," << minors.minor_12 << '\n'
               << "minor_13," << minors.minor_13 << '\n'
               << "minor_23," << minors.minor_23 << '\n'
               << "minor_sum," << minors.total << '\n';
            break;
        case OutputFormat::Json:
            os << json{{"n", n},
                       {"entries", matrix_json(m)},
                       {"trace", to_decimal(m.trace())},
                       {"minors", {{"12", to_decimal(minors.minor_12)},
                                   {"13", to_decimal(minors.minor_13)},
                                   {"23", to_decimal(minors.minor_23)}}},
                       {"minor_sum", to_decimal(minors.total)}}
                      .dump(2)
               << '\n';
            break;
    }
}

void render_roots(std::ostream& os, OutputFormat fmt, const RootSet& roots,
                  const VietaResiduals& residuals) {
    const int digits = roots.precision;
    const Real beta_mod = roots.beta.modulus();
    switch (fmt) {
        case OutputFormat::Plain:
        case OutputFormat::BFile:
            os << "precision = " << digits << " digits (" << roots.alpha.bits() << " bits)\n"
               << "alpha   = " << roots.alpha.str(digits) << '\n'
               << "beta    = " << complex_plain(roots.beta, digits) << '\n'
               << "gamma   = " << complex_plain(roots.gamma, digits) << '\n'
               << "|beta|  = " << beta_mod.str(digits) << '\n'
               << "|alpha+beta+gamma - 1|  = " << residuals.sum_res.str(3) << '\n'
               << "|sum of pairs + 1|      = " << residuals.pair_res.str(3) << '\n'
               << "|alpha*beta*gamma - 1|  = " << residuals.prod_res.str(3) << '\n';
            break;
        case OutputFormat::Csv:
            os << "quantity,value\n"
               << "alpha," << roots.alpha.str(digits) << '\n'
               << "beta_re," << roots.beta.re.str(digits) << '\n'
               << "beta_im," << roots.beta.im.str(digits) << '\n'
               << "gamma_re," << roots.gamma.re.str(digits) << '\n'
               << "gamma_im," << roots.gamma.im.str(digits) << '\n'
               << "beta_modulus," << beta_mod.str(digits) << '\n'
               << "sum_res," << residuals.sum_res.str(3) << '\n'
               << "pair_res," << residuals.pair_res.str(3) << '\n'
               << "prod_res," << residuals.prod_res.str(3) << '\n';
            break;
        case OutputFormat::Json:
            os << json{{"precision", digits},
                       {"alpha", roots.alpha.str(digits)},
                       {"beta", complex_json(roots.beta, digits)},
                       {"gamma", complex_json(roots.gamma, digits)},
                       {"beta_modulus", beta_mod.str(digits)},
                       {"residuals", {{"sum", residuals.sum_res.str(3)},
                                      {"pair", residuals.pair_res.str(3)},
                                      {"prod", residuals.prod_res.str(3)}}}}
                      .dump(2)
               << '\n';
            break;
    }
}

void render_crosscheck(std::ostream& os, OutputFormat fmt, SequenceKind kind,
                       const oeis::CrosscheckReport& report) {
    switch (fmt) {
        case OutputFormat::Plain:
        case OutputFormat::BFile:
            os << report.sequence_id << " vs " << short_name(kind) << ": " << report.rows_compared
               << " rows compared, index shift " << report.offset_used << ", "
               << report.mismatches.size() << " mismatches\n";
            for (const auto& m : report.mismatches) {
                os << "  row " << m.index << ": computed " << abbreviated(m.local) << ", b-file "
                   << abbreviated(m.remote) << '\n';
            }
            break;
        case OutputFormat::Csv:
            os << "index,computed,bfile\n";
            for (const auto& m : report.mismatches) os << m.index << ',' << m.local << ',' << m.remote << '\n';
            break;
        case OutputFormat::Json: {
            json arr = json::array();
            for (const auto& m : report.mismatches) {
                arr.push_back({{"index", m.index}, {"computed", to_decimal(m.local)},
                               {"bfile", to_decimal(m.remote)}});
            }
            os << json{{"sequence_id", report.sequence_id}, {"sequence", short_name(kind)},
                       {"offset_used", report.offset_used}, {"rows_compared", report.rows_compared},
                       {"mismatches", arr}}
                      .dump(2)
               << '\n';
            break;
        }
    }
}

void render_bench(std::ostream& os, OutputFormat fmt, const BenchResult& result) {
    switch (fmt) {
        case OutputFormat::Plain:
        case OutputFormat::BFile:
            os << "bench " << short_name(result.kind) << "_" << result.n << ", best of "
               << result.repetitions << '\n';
            for (const auto& row : result.rows) {
                os << "  " << std::left << std::setw(11) << row.strategy << std::right
                   << std::setw(12) << std::fixed << std::setprecision(3) << row.best_ms << " ms  "
                   << (row.value ? abbreviated(*row.value) : std::string("-"));
                if (!row.note.empty()) os << "  [" << row.note << ']';
                os << '\n';
            }
            os << "recurrence == matrix: " << (result.exact_agreement ? "yes" : "NO") << '\n';
            break;
        case OutputFormat::Csv:
            os << "strategy,best_ms,value,note\n";
            for (const auto& row : result.rows) {
                os << row.strategy << ',' << row.best_ms << ','
                   << (row.value ? to_decimal(*row.value) : std::string()) << ",\"" << row.note
                   << "\"\n";
            }
            break;
        case OutputFormat::Json: {
            json rows = json::array();
            for (const auto& row : result.rows) {
                rows.push_back({{"strategy", row.strategy},
                                {"best_ms", row.best_ms},
                                {"value", row.value ? json(to_decimal(*row.value)) : json(nullptr)},
                                {"note", row.note}});
            }
            os << json{{"sequence", short_name(result.kind)}, {"n", result.n},
                       {"repetitions", result.repetitions}, {"strategies", rows},
                       {"exact_agreement", result.exact_agreement}}
                      .dump(2)
               << '\n';
            break;
        }
    }
}

}  // namespace tribokit::cli
