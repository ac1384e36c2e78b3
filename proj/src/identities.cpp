#include "tribokit/identities.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

namespace tribokit {

namespace {

constexpr std::size_t kind_slot(SequenceKind kind) { return static_cast<std::size_t>(kind); }

constexpr std::array<SequenceKind, 3> kAllKinds{
    SequenceKind::Tribonacci, SequenceKind::GeneralizedLucas, SequenceKind::MinorSum};

// Largest table the verifier will build for one sequence.
constexpr Index kMaxTableSpan = 2'000'000;

template <typename F>
void for_each_point(const IdentityRecord& record, const VerifyRange& range, F&& f) {
    for (Index n = range.n.lo; n <= range.n.hi; ++n) {
        if (record.arity == 1) {
            if (record.domain(n, 0)) f(n, Index{0});
            continue;
        }
        for (Index m = range.m.lo; m <= range.m.hi; ++m) {
            if (record.domain(n, m)) f(n, m);
        }
    }
}

// Records which terms an evaluator asks for; every term reads as zero.
class Probe final : public TermSource {
  public:
    const Integer& get(SequenceKind kind, Index i) const override {
        extents.include(kind, i);
        return zero_;
    }
    mutable Extents extents;

  private:
    Integer zero_{0};
};

IdentityRecord unary(std::string id, std::string statement, std::string citation,
                     std::function<bool(Index)> domain, Evaluator lhs, std::vector<Evaluator> rhs) {
    return IdentityRecord{std::move(id),  1, std::move(statement), std::move(citation),
                          [d = std::move(domain)](Index n, Index) { return d(n); },
                          std::move(lhs), std::move(rhs)};
}

IdentityRecord binary(std::string id, std::string statement, std::string citation,
                      std::function<bool(Index, Index)> domain, Evaluator lhs, Evaluator rhs) {
    return IdentityRecord{std::move(id),  2, std::move(statement), std::move(citation),
                          std::move(domain), std::move(lhs), {std::move(rhs)}};
}

bool any_n(Index) { return true; }
bool nonneg(Index n) { return n >= 0; }

std::vector<IdentityRecord> build_registry() {
    using Q = const TermSource&;
    std::vector<IdentityRecord> r;

    r.push_back(unary(
        "REC_C", "C_n = -C_{n-1} - C_{n-2} + C_{n-3}", "recurrence for C_n", any_n,
        [](Q q, Index n, Index) { return q.C(n); },
        {[](Q q, Index n, Index) { return Integer(-q.C(n - 1) - q.C(n - 2) + q.C(n - 3)); }}));

    r.push_back(unary(
        "REC_CEVEN", "C_{2n} = -C_{2n-2} - 3C_{2n-4} + C_{2n-6}", "recurrence for C_{2n}", any_n,
        [](Q q, Index n, Index) { return q.C(2 * n); },
        {[](Q q, Index n, Index) {
            return Integer(-q.C(2 * n - 2) - 3 * q.C(2 * n - 4) + q.C(2 * n - 6));
        }}));

    r.push_back(binary(
        "PROD_GE", "S_n S_{n+m} = S_{2n+m} + S_m C_n - C_{n-m}", "product identity, n >= m",
        [](Index n, Index m) { return n >= m && m >= 0; },
        [](Q q, Index n, Index m) { return Integer(q.S(n) * q.S(n + m)); },
        [](Q q, Index n, Index m) { return Integer(q.S(2 * n + m) + q.S(m) * q.C(n) - q.C(n - m)); }));

    r.push_back(binary(
        "PROD_LT", "S_n S_{n+m} = S_{2n+m} + S_m C_n - S_{m-n}", "product identity, n < m",
        [](Index n, Index m) { return n >= 0 && n < m; },
        [](Q q, Index n, Index m) { return Integer(q.S(n) * q.S(n + m)); },
        [](Q q, Index n, Index m) { return Integer(q.S(2 * n + m) + q.S(m) * q.C(n) - q.S(m - n)); }));

    r.push_back(unary(
        "CONS_1", "S_n S_{n-1} = S_{2n-1} + C_{n-1} - C_{n-2}", "product with m = 1, shifted",
        [](Index n) { return n >= 1; },
        [](Q q, Index n, Index) { return Integer(q.S(n) * q.S(n - 1)); },
        {[](Q q, Index n, Index) { return Integer(q.S(2 * n - 1) + q.C(n - 1) - q.C(n - 2)); }}));

    r.push_back(unary(
        "CONS_2", "S_n S_{2n} = S_{3n} + S_n C_n - 3", "product with m = n", nonneg,
        [](Q q, Index n, Index) { return Integer(q.S(n) * q.S(2 * n)); },
        {[](Q q, Index n, Index) { return Integer(q.S(3 * n) + q.S(n) * q.C(n) - 3); }}));

    r.push_back(binary(
        "CONS_3", "S_n S_{nm} = S_{n(m+1)} + S_{n(m-1)} C_n - S_{n(m-2)}",
        "general multiple-index product",
        [](Index n, Index m) { return n >= 0 && m >= 2; },
        [](Q q, Index n, Index m) { return Integer(q.S(n) * q.S(n * m)); },
        [](Q q, Index n, Index m) {
            return Integer(q.S(n * (m + 1)) + q.S(n * (m - 1)) * q.C(n) - q.S(n * (m - 2)));
        }));

    r.push_back(unary(
        "SQUARE", "S_n^2 = S_{2n} + 2C_n", "square of S_n", nonneg,
        [](Q q, Index n, Index) { return Integer(q.S(n) * q.S(n)); },
        {[](Q q, Index n, Index) { return Integer(q.S(2 * n) + 2 * q.C(n)); }}));

    r.push_back(unary(
        "CUBE", "S_n^3 = S_{3n} + 3S_n C_n - 3", "cube of S_n", nonneg,
        [](Q q, Index n, Index) { return Integer(q.S(n) * q.S(n) * q.S(n)); },
        {[](Q q, Index n, Index) { return Integer(q.S(3 * n) + 3 * q.S(n) * q.C(n) - 3); }}));

    r.push_back(unary(
        "QUARTIC_A", "S_n^4 = S_{4n} + 2C_{2n} + 4C_n^2 + 4S_{2n} C_n", "fourth power via squares",
        nonneg,
        [](Q q, Index n, Index) {
            const Integer sq = q.S(n) * q.S(n);
            return Integer(sq * sq);
        },
        {[](Q q, Index n, Index) {
            return Integer(q.S(4 * n) + 2 * q.C(2 * n) + 4 * q.C(n) * q.C(n) +
                           4 * q.S(2 * n) * q.C(n));
        }}));

    r.push_back(unary(
        "QUARTIC_B", "S_n^4 = S_{4n} - 4S_n + 4S_{2n} C_n + 6C_n^2", "fourth power via cube",
        nonneg,
        [](Q q, Index n, Index) {
            const Integer sq = q.S(n) * q.S(n);
            return Integer(sq * sq);
        },
        {[](Q q, Index n, Index) {
            return Integer(q.S(4 * n) - 4 * q.S(n) + 4 * q.S(2 * n) * q.C(n) +
                           6 * q.C(n) * q.C(n));
        }}));

    r.push_back(unary(
        "CN2", "2S_n = C_n^2 - C_{2n}", "comparing the two fourth-power forms", nonneg,
        [](Q q, Index n, Index) { return Integer(2 * q.S(n)); },
        {[](Q q, Index n, Index) { return Integer(q.C(n) * q.C(n) - q.C(2 * n)); }}));

    r.push_back(unary(
        "S_T_FORMS", "S_n = T_n + 2T_{n-1} + 3T_{n-2} = 3T_{n+1} - 2T_n - T_{n-1}",
        "trace of A^n; generating function", any_n,
        [](Q q, Index n, Index) { return q.S(n); },
        {[](Q q, Index n, Index) { return Integer(q.T(n) + 2 * q.T(n - 1) + 3 * q.T(n - 2)); },
         [](Q q, Index n, Index) { return Integer(3 * q.T(n + 1) - 2 * q.T(n) - q.T(n - 1)); }}));

    r.push_back(unary(
        "C_T_FORMS", "C_n as the two quadratic forms in T", "principal minors of A^n", any_n,
        [](Q q, Index n, Index) { return q.C(n); },
        {[](Q q, Index n, Index) {
             return Integer(2 * q.T(n + 1) * q.T(n - 2) + q.T(n + 1) * q.T(n - 1) -
                            q.T(n) * q.T(n) - 2 * q.T(n) * q.T(n - 1) -
                            q.T(n - 1) * q.T(n - 3) + q.T(n - 2) * q.T(n - 2));
         },
         [](Q q, Index n, Index) {
             return Integer(-q.T(n) * q.T(n) + 2 * q.T(n - 1) * q.T(n - 1) +
                            3 * q.T(n - 2) * q.T(n - 2) - 2 * q.T(n) * q.T(n - 1) +
                            2 * q.T(n) * q.T(n - 2) + 4 * q.T(n - 1) * q.T(n - 2));
         }}));

    return r;
}

void check_range(const VerifyRange& range) {
    if (range.n.lo > range.n.hi || range.m.lo > range.m.hi) {
        throw std::invalid_argument("verify: empty index range (lo > hi)");
    }
}

}  // namespace

Seeds& SequenceSeeds::operator[](SequenceKind kind) {
    switch (kind) {
        case SequenceKind::Tribonacci: return t;
        case SequenceKind::GeneralizedLucas: return s;
        case SequenceKind::MinorSum: return c;
    }
    throw std::logic_error("unknown sequence kind");
}

const Seeds& SequenceSeeds::operator[](SequenceKind kind) const {
    return const_cast<SequenceSeeds&>(*this)[kind];
}

void Extents::include(SequenceKind kind, Index i) {
    IndexBounds& b = span[kind_slot(kind)];
    if (b.lo > b.hi) {
        b = {i, i};
    } else {
        b.lo = std::min(b.lo, i);
        b.hi = std::max(b.hi, i);
    }
}

void Extents::merge(const Extents& other) {
    for (SequenceKind kind : kAllKinds) {
        const IndexBounds& b = other.span[kind_slot(kind)];
        if (b.lo > b.hi) continue;
        include(kind, b.lo);
        include(kind, b.hi);
    }
}

SequenceTable::SequenceTable(const SequenceSeeds& seeds, const Extents& extents) {
    for (SequenceKind kind : kAllKinds) {
        const IndexBounds& b = extents.span[kind_slot(kind)];
        if (b.lo > b.hi) continue;
        if (b.hi - b.lo >= kMaxTableSpan) {
            throw std::invalid_argument("verify: range needs " + std::string(short_name(kind)) +
                                        " over [" + std::to_string(b.lo) + ", " +
                                        std::to_string(b.hi) + "], which is too large");
        }
        auto terms = sequence_range(recurrence_coefficients(kind), seeds[kind], b.lo, b.hi);
        auto& out = values_[kind_slot(kind)];
        out.reserve(terms.size());
        for (auto& t : terms) out.push_back(std::move(t.value));
        lo_[kind_slot(kind)] = b.lo;
    }
}

const Integer& SequenceTable::get(SequenceKind kind, Index i) const {
    const auto& vals = values_[kind_slot(kind)];
    const Index offset = i - lo_[kind_slot(kind)];
    if (offset < 0 || offset >= static_cast<Index>(vals.size())) {
        throw std::out_of_range("SequenceTable: " + std::string(short_name(kind)) + "_" +
                                std::to_string(i) + " not tabulated");
    }
    return vals[static_cast<std::size_t>(offset)];
}

const std::vector<IdentityRecord>& registry() {
    static const std::vector<IdentityRecord> records = build_registry();
    return records;
}

const IdentityRecord* find_identity(std::string_view id) {
    for (const auto& r : registry()) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::string describe(const VerifyRange& range, int arity) {
    std::ostringstream os;
    os << "n in [" << range.n.lo << ", " << range.n.hi << "]";
    if (arity == 2) os << ", m in [" << range.m.lo << ", " << range.m.hi << "]";
    return os.str();
}

Extents footprint(const IdentityRecord& record, const VerifyRange& range) {
    check_range(range);
    Probe probe;
    for_each_point(record, range, [&](Index n, Index m) {
        record.lhs(probe, n, m);
        for (const auto& form : record.rhs) form(probe, n, m);
    });
    return probe.extents;
}

VerificationReport evaluate(const IdentityRecord& record, const VerifyRange& range,
                            const TermSource& terms) {
    check_range(range);
    VerificationReport report{record.id, describe(range, record.arity), 0, {}};
    for_each_point(record, range, [&](Index n, Index m) {
        ++report.cases_checked;
        Integer lhs = record.lhs(terms, n, m);
        for (std::size_t f = 0; f < record.rhs.size(); ++f) {
            Integer rhs = record.rhs[f](terms, n, m);
            if (lhs != rhs) report.counterexamples.push_back({n, m, lhs, std::move(rhs), f});
        }
    });
    return report;
}

VerificationReport verify(const IdentityRecord& record, const VerifyRange& range,
                          const SequenceSeeds& seeds) {
    const SequenceTable table(seeds, footprint(record, range));
    return evaluate(record, range, table);
}

VerificationReport verify(std::string_view id, const VerifyRange& range,
                          const SequenceSeeds& seeds) {
    const IdentityRecord* record = find_identity(id);
    if (record == nullptr) throw std::invalid_argument("unknown identity: " + std::string(id));
    return verify(*record, range, seeds);
}

std::vector<VerificationReport> verify_all(const VerifyRange& range, const SequenceSeeds& seeds) {
    const auto& records = registry();
    Extents extents;
    for (const auto& r : records) extents.merge(footprint(r, range));
    const SequenceTable table(seeds, extents);

    std::vector<std::future<VerificationReport>> pending;
    pending.reserve(records.size());
    for (const auto& r : records) {
        pending.push_back(std::async(std::launch::async,
                                     [&table, &range, &r] { return evaluate(r, range, table); }));
    }
    std::vector<VerificationReport> reports;
    reports.reserve(records.size());
    for (auto& p : pending) reports.push_back(p.get());
    return reports;
}

VerificationReport boundary_consistency() {
    constexpr Index kLast = 50;
    const auto S = sequence_range(SequenceKind::GeneralizedLucas, 0, 3 * kLast);
    const auto C = sequence_range(SequenceKind::MinorSum, 0, kLast);
    VerificationReport report{"BOUNDARY", "n = m in [0, 50]", 0, {}};
    for (Index n = 0; n <= kLast; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const Integer common = S[3 * i].value + S[i].value * C[i].value;
        Integer ge = common - C[0].value;  // PROD_GE: ... - C_{n-m}
        Integer lt = common - S[0].value;  // PROD_LT: ... - S_{m-n}
        ++report.cases_checked;
        if (ge != lt) report.counterexamples.push_back({n, n, std::move(ge), std::move(lt), 0});
    }
    return report;
}

}  // namespace tribokit
