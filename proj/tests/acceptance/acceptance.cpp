// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tribokit/analytic.hpp"
#include "tribokit/cli.hpp"
#include "tribokit/genfunc.hpp"
#include "tribokit/identities.hpp"
#include "tribokit/oeis.hpp"
#include "tribokit/seqcore.hpp"
#include "tribokit/tribomatrix.hpp"

using namespace tribokit;

namespace {

/// Collects the reasons a criterion failed; empty means pass.
struct Outcome {
    std::vector<std::string> problems;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

std::string read_fixture(std::string_view id) {
    std::ifstream in(std::string(TRIBOKIT_FIXTURE_DIR) + "/" + oeis::bfile_name(id));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void initial_values(Outcome& o) {
    const Integer t[] = {0, 1, 1}, s[] = {3, 1, 3}, c[] = {3, -1, -1};
    for (Index n = 0; n < 3; ++n) {
        const auto i = static_cast<std::size_t>(n);
        o.expect(tribonacci(n) == t[i], "T_" + std::to_string(n));
        o.expect(s_lucas(n) == s[i], "S_" + std::to_string(n));
        o.expect(c_seq(n) == c[i], "C_" + std::to_string(n));
    }
    o.expect(c_seq(4) == -5, "C_4 != -5");
}

void identity_suite(Outcome& o) {
    const auto reports = verify_all({{0, 100}, {0, 100}});
    o.expect(reports.size() == 14, "expected 14 reports, got " + std::to_string(reports.size()));
    std::size_t cases = 0;
    for (const auto& r : reports) {
        cases += r.cases_checked;
        o.expect(r.verified(), r.id + ": " + std::to_string(r.counterexamples.size()) +
                                   " counterexamples");
    }
    o.expect(cases > 10000, "only " + std::to_string(cases) + " cases");
}

void matrix_conformance(Outcome& o) {
    for (Index n = 0; n <= 64; ++n) {
        const Matrix3 p = mat_pow(n);
        const std::string at = " at n = " + std::to_string(n);
        o.expect(p == entries_from_tribonacci(n), "entry formula" + at);
        o.expect(p.trace() == s_lucas(n), "trace" + at);
        o.expect(minor_sum_of(p).total == c_seq(n), "minor sum" + at);
        o.expect(p.determinant() == 1, "determinant" + at);
    }
}

void ogf_conformance(Outcome& o) {
    const auto s = expand(builtin_ogf(BuiltinOgf::S), 500);
    const auto c = expand(builtin_ogf(BuiltinOgf::C), 500);
    const auto ce = expand(builtin_ogf(BuiltinOgf::CEven), 500);
    const auto rs = sequence_range(SequenceKind::GeneralizedLucas, 0, 499);
    const auto rc = sequence_range(SequenceKind::MinorSum, 0, 998);
    for (std::size_t i = 0; i < 500; ++i) {
        o.expect(s[i] == rs[i].value, "S OGF term " + std::to_string(i));
        o.expect(c[i] == rc[i].value, "C OGF term " + std::to_string(i));
        o.expect(ce[i] == rc[2 * i].value, "C_2n OGF term " + std::to_string(i));
    }
}

void analytic_conformance(Outcome& o) {
    const RootSet r = char_roots(15);
    const std::string alpha = r.alpha.fixed(7);
    const std::string modulus = r.beta.modulus().fixed(6);
    o.expect(alpha == "1.8392286", "alpha prints as " + alpha + ", expected 1.8392286");
    o.expect(modulus == "0.737353", "|beta| prints as " + modulus + ", expected 0.737353");

    const auto v = vieta_check(r);
    o.expect(v.sum_res.to_double() < 1e-12, "Vieta sum residual " + v.sum_res.str(3));
    o.expect(v.pair_res.to_double() < 1e-12, "Vieta pair residual " + v.pair_res.str(3));
    o.expect(v.prod_res.to_double() < 1e-12, "Vieta product residual " + v.prod_res.str(3));

    const RootSet r30 = char_roots(30);
    for (Index n = 0; n <= 40; ++n) {
        o.expect(binet_round(SequenceKind::GeneralizedLucas, n, r30) == s_lucas(n),
                 "binet S_" + std::to_string(n));
        o.expect(binet_round(SequenceKind::MinorSum, n, r30) == c_seq(n),
                 "binet C_" + std::to_string(n));
    }
    // Past the certified bound every call must refuse; none may return a wrong value.
    for (Index n = binet_cap(30) + 1; n <= 200; ++n) {
        for (auto kind : {SequenceKind::GeneralizedLucas, SequenceKind::MinorSum}) {
            try {
                const Integer got = binet_round(kind, n, r30);
                o.expect(false, "binet answered beyond its bound at n = " + std::to_string(n) +
                                    (got == term(kind, n) ? "" : " (wrongly)"));
            } catch (const PrecisionExhausted&) {
            }
        }
    }
}

void cross_strategy(Outcome& o) {
    for (auto kind : {SequenceKind::GeneralizedLucas, SequenceKind::MinorSum}) {
        const auto rec = sequence_range(kind, 0, 500);
        const auto ogf = expand(builtin_ogf(kind == SequenceKind::GeneralizedLucas ? BuiltinOgf::S
                                                                                   : BuiltinOgf::C),
                                501);
        for (Index n = 0; n <= 500; ++n) {
            const auto i = static_cast<std::size_t>(n);
            const Integer mat =
                kind == SequenceKind::GeneralizedLucas ? trace_pow(n) : minor_sum(n).total;
            o.expect(rec[i].value == mat && mat == ogf[i],
                     std::string(short_name(kind)) + " strategies differ at " + std::to_string(n));
        }

        std::ostringstream out, err;
        cli::Environment env{out, err, {}, {}};
        const int code = cli::run({"--format", "json", "bench", std::string(short_name(kind)), "100000", "1"}, env);
        o.expect(code == 0, "bench exited " + std::to_string(code));
        if (code == 0) {
            const auto j = nlohmann::json::parse(out.str());
            o.expect(j["exact_agreement"] == true,
                     std::string("bench ") + std::string(short_name(kind)) + " 100000 disagrees");
        }
    }
}

void oeis_crosscheck(Outcome& o) {
    for (auto kind : {SequenceKind::GeneralizedLucas, SequenceKind::Tribonacci,
                      SequenceKind::MinorSum}) {
        const std::string id(oeis::sequence_id(kind));
        try {
            const auto b = oeis::parse_bfile(read_fixture(id), id);
            const auto report = oeis::crosscheck(kind, b, b.rows.size());
            o.expect(report.rows_compared >= 50, id + ": only " + std::to_string(report.rows_compared) + " rows");
            o.expect(report.ok(), id + ": " + std::to_string(report.mismatches.size()) + " mismatches");

            auto corrupted = b;
            corrupted.rows[23].value *= 2;
            corrupted.rows[23].value += 1;
            const auto bad = oeis::crosscheck(kind, corrupted, 50);
            o.expect(bad.mismatches.size() == 1 && bad.mismatches[0].index == corrupted.rows[23].index,
                     id + ": corrupted row not reported at its index");
        } catch (const std::exception& e) {
            o.expect(false, id + ": " + e.what());
        }
    }
}

void fault_sensitivity(Outcome& o) {
    for (auto kind : {SequenceKind::Tribonacci, SequenceKind::GeneralizedLucas,
                      SequenceKind::MinorSum}) {
        for (std::size_t k = 0; k < 3; ++k) {
            SequenceSeeds seeds;
            seeds[kind][k] += 1;
            bool caught = false;
            for (const auto& r : verify_all({{0, 100}, {0, 100}}, seeds)) caught = caught || !r.verified();
            o.expect(caught, std::string("seed ") + std::string(short_name(kind)) + "_" +
                                 std::to_string(k) + " + 1 went unnoticed");
        }
    }
    SequenceSeeds flipped;
    flipped.c[1] = 1;
    bool caught = false;
    for (const auto& r : verify_all({{0, 100}, {0, 100}}, flipped)) caught = caught || !r.verified();
    o.expect(caught, "C_1 = +1 went unnoticed");
}

struct Criterion {
    int number;
    std::string name;
    double budget_s;
    std::function<void(Outcome&)> check;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "initial values", 0.1, initial_values},
        {2, "identity suite on [0, 100]", 10.0, identity_suite},
        {3, "matrix conformance on [0, 64]", 1.0, matrix_conformance},
        {4, "OGF conformance, 500 terms", 1.0, ogf_conformance},
        {5, "analytic conformance", 1.0, analytic_conformance},
        {6, "cross-strategy equivalence", 30.0, cross_strategy},
        {7, "OEIS crosscheck", 1.0, oeis_crosscheck},
        {8, "fault sensitivity", 10.0, fault_sensitivity},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.check(outcome);
        } catch (const std::exception& e) {
            outcome.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream budget;
        budget << "runtime " << seconds << " s exceeds " << c.budget_s << " s";
        outcome.expect(seconds <= c.budget_s, budget.str());

        const bool pass = outcome.problems.empty();
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << c.number << ". " << c.name << " ("
                  << static_cast<long>(seconds * 1000) << " ms)";
        if (!pass) {
            std::cout << ": " << outcome.problems.front();
            if (outcome.problems.size() > 1) std::cout << " (+" << outcome.problems.size() - 1 << " more)";
        }
        std::cout << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
