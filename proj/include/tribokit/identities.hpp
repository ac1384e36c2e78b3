#pragma once

// Every identity relating T_n, S_n and C_n kept as data: a domain predicate
// plus exact evaluators for both sides. The verifier evaluates each record
// over an index box and reports every mismatch with both side values.

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tribokit/seqcore.hpp"

namespace tribokit {

/// Read access to sequence terms; identities are written against this so the
/// same evaluator can run on exact tables, probes, or fault-injected tables.
class TermSource {
  public:
    virtual ~TermSource() = default;
    virtual const Integer& get(SequenceKind kind, Index i) const = 0;

    const Integer& T(Index i) const { return get(SequenceKind::Tribonacci, i); }
    const Integer& S(Index i) const { return get(SequenceKind::GeneralizedLucas, i); }
    const Integer& C(Index i) const { return get(SequenceKind::MinorSum, i); }
};

/// Initial values for all three sequences. Tests mutate these to check that
/// the identity suite notices.
struct SequenceSeeds {
    Seeds t = default_seeds(SequenceKind::Tribonacci);
    Seeds s = default_seeds(SequenceKind::GeneralizedLucas);
    Seeds c = default_seeds(SequenceKind::MinorSum);

    Seeds& operator[](SequenceKind kind);
    const Seeds& operator[](SequenceKind kind) const;
};

struct IndexBounds {
    Index lo = 0;
    Index hi = 0;
};

/// Closed index span per sequence; empty when lo > hi.
struct Extents {
    std::array<IndexBounds, 3> span{IndexBounds{1, 0}, IndexBounds{1, 0}, IndexBounds{1, 0}};

    void include(SequenceKind kind, Index i);
    void merge(const Extents& other);
};

/// Precomputed terms over fixed extents. Lookups outside throw std::out_of_range.
class SequenceTable final : public TermSource {
  public:
    SequenceTable(const SequenceSeeds& seeds, const Extents& extents);
    const Integer& get(SequenceKind kind, Index i) const override;

  private:
    std::array<Index, 3> lo_{};
    std::array<std::vector<Integer>, 3> values_;
};

using Evaluator = std::function<Integer(const TermSource&, Index n, Index m)>;

struct IdentityRecord {
    std::string id;
    int arity = 1;  // 1: n only; 2: n and m
    std::string statement;
    std::string citation;
    std::function<bool(Index n, Index m)> domain;
    Evaluator lhs;
    /// One or more right-hand forms; each must equal lhs.
    std::vector<Evaluator> rhs;
};

/// Per-variable bounds. Unary identities ignore `m`.
struct VerifyRange {
    IndexBounds n{0, 100};
    IndexBounds m{0, 100};
};

struct Counterexample {
    Index n = 0;
    Index m = 0;
    Integer lhs;
    Integer rhs;
    std::size_t form = 0;  // which rhs form disagreed

    bool operator==(const Counterexample&) const = default;
};

struct VerificationReport {
    std::string id;
    std::string range;
    std::size_t cases_checked = 0;
    std::vector<Counterexample> counterexamples;

    bool verified() const { return counterexamples.empty(); }
    bool operator==(const VerificationReport&) const = default;
};

/// The fourteen catalogued identities, in fixed order.
const std::vector<IdentityRecord>& registry();

/// nullptr when no record has this id.
const IdentityRecord* find_identity(std::string_view id);

/// Sequence indices a record touches over the domain points of `range`.
Extents footprint(const IdentityRecord& record, const VerifyRange& range);

/// Evaluates a record at every domain point of `range` against `terms`.
VerificationReport evaluate(const IdentityRecord& record, const VerifyRange& range,
                            const TermSource& terms);

VerificationReport verify(const IdentityRecord& record, const VerifyRange& range,
                          const SequenceSeeds& seeds = {});

/// Throws std::invalid_argument for an unknown id.
VerificationReport verify(std::string_view id, const VerifyRange& range,
                          const SequenceSeeds& seeds = {});

/// One report per registry record, in registry order. Records are evaluated
/// concurrently against a shared read-only table.
std::vector<VerificationReport> verify_all(const VerifyRange& range,
                                           const SequenceSeeds& seeds = {});

/// At n = m the two product identities must coincide, which needs C_0 = S_0.
/// Compares S_{3n} + S_nC_n - C_0 against S_{3n} + S_nC_n - S_0 for n in [0, 50].
VerificationReport boundary_consistency();

std::string describe(const VerifyRange& range, int arity);

}  // namespace tribokit
