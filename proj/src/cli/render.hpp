#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tribokit/analytic.hpp"
#include "tribokit/cli.hpp"
#include "tribokit/genfunc.hpp"
#include "tribokit/tribomatrix.hpp"

namespace tribokit::cli {

struct BenchRow {
    std::string strategy;
    double best_ms = 0.0;
    std::optional<Integer> value;  // empty when the strategy refused
    std::string note;              // error bound, refusal reason
};

struct BenchResult {
    SequenceKind kind;
    Index n;
    int repetitions;
    std::vector<BenchRow> rows;
    bool exact_agreement;  // recurrence value == matrix value
};

void render_terms(std::ostream& os, OutputFormat fmt, SequenceKind kind, std::string_view strategy,
                  const std::vector<Term>& terms);
void render_reports(std::ostream& os, OutputFormat fmt,
                    const std::vector<VerificationReport>& reports);
void render_expansion(std::ostream& os, OutputFormat fmt, const RationalOGF& ogf,
                      const std::vector<Integer>& coefficients);
void render_matrix(std::ostream& os, OutputFormat fmt, Index n, const Matrix3& m,
                   const MinorSumReport& minors);
void render_roots(std::ostream& os, OutputFormat fmt, const RootSet& roots,
                  const VietaResiduals& residuals);
void render_crosscheck(std::ostream& os, OutputFormat fmt, SequenceKind kind,
                       const oeis::CrosscheckReport& report);
void render_bench(std::ostream& os, OutputFormat fmt, const BenchResult& result);

}  // namespace tribokit::cli
