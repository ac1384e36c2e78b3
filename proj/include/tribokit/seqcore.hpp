#pragma once

// Exact evaluation of the Tribonacci family on all of Z.
//
//   T_n = T_{n-1} + T_{n-2} + T_{n-3},    T_0, T_1, T_2 = 0, 1, 1
//   S_n = S_{n-1} + S_{n-2} + S_{n-3},    S_0, S_1, S_2 = 3, 1, 3
//   C_n = -C_{n-1} - C_{n-2} + C_{n-3},   C_0, C_1, C_2 = 3, -1, -1
//
// Each recurrence has trailing coefficient 1, so stepping backwards
// (a_{n-3} = a_n - c1 a_{n-1} - c2 a_{n-2}) stays in the integers and gives
// the unique bi-infinite extension.

#include <array>
#include <vector>

#include "tribokit/types.hpp"

namespace tribokit {

/// Three consecutive values a_0, a_1, a_2.
using Seeds = std::array<Integer, 3>;

/// Coefficients (c1, c2, c3) of a_n = c1 a_{n-1} + c2 a_{n-2} + c3 a_{n-3}.
/// c3 must be +1 or -1 for the backward step to be exact.
using Coefficients = std::array<long, 3>;

struct Term {
    Index index;
    Integer value;

    bool operator==(const Term&) const = default;
};

Seeds default_seeds(SequenceKind kind);
Coefficients recurrence_coefficients(SequenceKind kind);

Integer tribonacci(Index n);
Integer s_lucas(Index n);
Integer c_seq(Index n);
Integer term(SequenceKind kind, Index n);

/// C_{2k} from the even-index recurrence C_{2k} = -C_{2k-2} - 3C_{2k-4} + C_{2k-6}
/// seeded with C_0, C_2, C_4. Throws std::domain_error for k < 0.
Integer c_even(Index k);

enum class SForm {
    MinorForm,  // T_n + 2T_{n-1} + 3T_{n-2}
    OgfForm,    // 3T_{n+1} - 2T_n - T_{n-1}
};

enum class CForm {
    MinorExpansion,  // 2T_{n+1}T_{n-2} + T_{n+1}T_{n-1} - T_n^2 - 2T_nT_{n-1} - T_{n-1}T_{n-3} + T_{n-2}^2
    SquareForm,      // -T_n^2 + 2T_{n-1}^2 + 3T_{n-2}^2 - 2T_nT_{n-1} + 2T_nT_{n-2} + 4T_{n-1}T_{n-2}
};

Integer s_from_t(Index n, SForm form);
Integer c_from_t(Index n, CForm form);

/// All values on [lo, hi] in one linear pass. Throws std::invalid_argument if lo > hi.
std::vector<Term> sequence_range(SequenceKind kind, Index lo, Index hi);

/// Same pass for an arbitrary order-3 recurrence given its values at 0, 1, 2.
std::vector<Term> sequence_range(const Coefficients& coeffs, const Seeds& seeds, Index lo,
                                 Index hi);

}  // namespace tribokit
