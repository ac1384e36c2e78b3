#pragma once

// Thin value-semantic wrapper over an MPFR float. Each value carries its own
// precision; binary operations round to the larger precision of the operands.

#include <compare>
#include <string>

#include <mpfr.h>

namespace tribokit {

class Real {
  public:
    explicit Real(mpfr_prec_t bits = 53);
    Real(long value, mpfr_prec_t bits);
    Real(double value, mpfr_prec_t bits);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }

    /// %g-style rendering with `significant` digits.
    std::string str(int significant) const;
    /// Fixed-point rendering with `decimals` digits after the point, rounded to nearest.
    std::string fixed(int decimals) const;

    Real operator-() const;
    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator*(const Real& a, long b);

    friend std::partial_ordering operator<=>(const Real& a, const Real& b);
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real pow(const Real& x, long n);
Real max(const Real& a, const Real& b);
/// 2^e at the given precision.
Real exp2(long e, mpfr_prec_t bits);

}  // namespace tribokit
