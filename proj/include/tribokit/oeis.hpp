#pragma once

// OEIS b-files: one "index value" pair per line, '#' comment lines, blank
// lines allowed. Values are arbitrary-precision integers.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tribokit/seqcore.hpp"

namespace tribokit::oeis {

struct Row {
    Index index;
    Integer value;

    bool operator==(const Row&) const = default;
};

struct BFile {
    std::string sequence_id;  // "A" + 6 digits
    std::vector<Row> rows;    // strictly increasing indices, never empty
};

class BFileError : public std::runtime_error {
  public:
    enum class Kind { Malformed, Structural };

    BFileError(Kind kind, std::size_t line, const std::string& message);

    Kind kind() const { return kind_; }
    /// 1-based line of the offending text; 0 when the problem is not tied to a line.
    std::size_t line() const { return line_; }

  private:
    Kind kind_;
    std::size_t line_;
};

class FetchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

bool is_valid_id(std::string_view id);

/// "A001644" -> "b001644.txt".
std::string bfile_name(std::string_view id);

/// The entry the sequence is catalogued under.
std::string_view sequence_id(SequenceKind kind);

/// Local index = b-file index + shift. A000073 starts 0, 0, 1, 1, ... so its
/// entry k is T_{k-1}; the other two entries share our indexing.
Index index_shift(std::string_view id);

BFile parse_bfile(std::string_view text, std::string sequence_id);

/// Throws std::domain_error if lo < 0, std::invalid_argument if lo > hi.
std::string format_bfile(SequenceKind kind, Index lo, Index hi);

struct Mismatch {
    Index index;  // b-file index
    Integer local;
    Integer remote;

    bool operator==(const Mismatch&) const = default;
};

struct CrosscheckReport {
    std::string sequence_id;
    Index offset_used = 0;  // shift applied: local index = b-file index + offset_used
    std::size_t rows_compared = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Compares the first `max_rows` rows of `bfile` with the computed sequence.
CrosscheckReport crosscheck(SequenceKind kind, const BFile& bfile, std::size_t max_rows);

/// Returns the b-file text for an id, throwing on failure.
using Transport = std::function<std::string(std::string_view sequence_id)>;

/// Transport failures are rethrown as FetchError naming the id; parse errors pass through.
BFile fetch_bfile(std::string_view sequence_id, const Transport& transport);

/// Blocking HTTP(S) GET of "<base_url>/<id>/b<digits>.txt", e.g. base "https://oeis.org".
Transport http_transport(std::string base_url);

}  // namespace tribokit::oeis
