#pragma once

// Rational ordinary generating functions N(x)/D(x) with D(0) = 1. Since the
// denominator is a unit in Z[[x]], the series coefficients are integers:
//   a_n = N_n - sum_{k>=1} D_k a_{n-k}

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tribokit/types.hpp"

namespace tribokit {

/// Integer polynomial, ascending degree, trailing zeros stripped.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    const std::vector<Integer>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Coefficient of x^k, zero past the degree.
    Integer coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  private:
    void normalize();
    std::vector<Integer> c_;
};

std::string to_string(const IntPolynomial& p);

struct RationalOGF {
    IntPolynomial numerator;
    IntPolynomial denominator;
};

/// Throws std::invalid_argument unless D(0) = 1 and deg D >= 1.
void validate(const RationalOGF& ogf);

/// First `count` series coefficients. Throws std::invalid_argument on an
/// invalid OGF or count == 0.
std::vector<Integer> expand(const RationalOGF& ogf, std::size_t count);

enum class BuiltinOgf {
    S,      // (3 - 2x - x^2) / (1 - x - x^2 - x^3)
    C,      // (3 + 2x + x^2) / (1 + x + x^2 - x^3)
    CEven,  // (3 + 2x + 3x^2) / (1 + x + 3x^2 - x^3), generates C_{2n}
};

RationalOGF builtin_ogf(BuiltinOgf kind);
std::optional<BuiltinOgf> parse_builtin_ogf(std::string_view name);

/// a_n = sum_k coefficients[k-1] * a_{n-k}, valid once the seeds are exhausted.
struct LinearRecurrence {
    std::vector<Integer> coefficients;
    std::vector<Integer> seeds;

    /// First `count` terms, seeds included.
    std::vector<Integer> run(std::size_t count) const;
};

/// Reads c_k = -D_k off the denominator and takes max(deg N + 1, deg D)
/// initial terms from the expansion.
LinearRecurrence recurrence_of(const RationalOGF& ogf);

}  // namespace tribokit
