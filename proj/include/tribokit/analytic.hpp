#pragma once

// Numerical roots of x^3 - x^2 - x - 1 and Binet-style evaluation of S_n and
// C_n in multiprecision floating point. Nothing here is used to decide
// identities; the exact modules are the reference and this module certifies
// itself against them by refusing to round when its error bound is too wide.

#include <stdexcept>

#include "tribokit/real.hpp"
#include "tribokit/types.hpp"

namespace tribokit {

struct Complex {
    Real re;
    Real im;

    Complex conj() const { return {re, -im}; }
    Real modulus() const;
    Complex inverse() const;

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b);
};

/// z^n by square-and-multiply; negative n inverts first.
Complex pow(const Complex& z, long n);

/// alpha is the real root; beta has positive imaginary part and gamma = conj(beta).
struct RootSet {
    Real alpha;
    Complex beta;
    Complex gamma;
    int precision;  // decimal digits requested
};

struct VietaResiduals {
    Real sum_res;   // |alpha + beta + gamma - 1|
    Real pair_res;  // |alpha beta + alpha gamma + beta gamma + 1|
    Real prod_res;  // |alpha beta gamma - 1|
};

/// Raised when a Binet evaluation cannot certify its result.
class PrecisionExhausted : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMinPrecision = 15;
inline constexpr int kDefaultPrecision = 30;

/// MPFR working precision for a decimal-digit request: ceil(digits * log2 10) + 8 guard bits.
mpfr_prec_t working_bits(int precision);

/// Largest |n| accepted by the Binet evaluators at this precision (2 * precision).
Index binet_cap(int precision);

/// Bracketed Newton on [1, 2] for alpha, then beta/gamma from
/// x^2 - (1 - alpha) x + 1/alpha. Throws std::invalid_argument for
/// precision < 15 and std::runtime_error if Newton fails to converge.
RootSet char_roots(int precision = kDefaultPrecision);

VietaResiduals vieta_check(const RootSet& roots);

struct BinetValue {
    Real value;           // real part of the sum of powers
    Real imag_residual;   // |imaginary part|, zero in exact arithmetic
    Real error_bound;     // a-priori bound on |value - exact|
};

/// Evaluates alpha^n + beta^n + gamma^n (S) or (alpha beta)^n + (alpha gamma)^n
/// + (beta gamma)^n (C) together with its error bound. Only S and C are
/// supported; Tribonacci throws std::invalid_argument. |n| above `cap`
/// throws PrecisionExhausted.
BinetValue binet_evaluate(SequenceKind kind, Index n, const RootSet& roots, Index cap);
BinetValue binet_evaluate(SequenceKind kind, Index n, const RootSet& roots);

/// Real part of the Binet sum; throws PrecisionExhausted when the imaginary
/// residual exceeds 1e-6 * max(1, |value|).
Real binet_s(Index n, const RootSet& roots);
Real binet_c(Index n, const RootSet& roots);

/// Nearest integer to the Binet value, only when the error bound is below 1/2.
Integer binet_round(SequenceKind kind, Index n, const RootSet& roots, Index cap);
Integer binet_round(SequenceKind kind, Index n, const RootSet& roots);

}  // namespace tribokit
