#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tribokit {

/// Exact arbitrary-precision signed integer. Every sequence value lives here.
using Integer = mpz_class;

/// Sequence position. Negative positions are reached through the reversed
/// recurrences.
using Index = std::int64_t;

enum class SequenceKind {
    Tribonacci,        // T_n, OEIS A000073 (shifted, see oeis.hpp)
    GeneralizedLucas,  // S_n, OEIS A001644
    MinorSum,          // C_n, OEIS A073145
};

/// Short CLI name: "T", "S" or "C".
std::string_view short_name(SequenceKind kind);

/// Accepts the short names plus the long enumerator names, case-insensitively.
std::optional<SequenceKind> parse_kind(std::string_view text);

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

}  // namespace tribokit
