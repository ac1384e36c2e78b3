#include "tribokit/real.hpp"

#include <algorithm>
#include <stdexcept>

namespace tribokit {

Real::Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) : Real(bits) { mpfr_set_si(v_, value, MPFR_RNDN); }

Real::Real(double value, mpfr_prec_t bits) : Real(bits) { mpfr_set_d(v_, value, MPFR_RNDN); }

Real::Real(const Real& other) {
    mpfr_init2(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.bits());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

namespace {

std::string render(const char* fmt, int digits, mpfr_srcptr v) {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, digits, v) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

template <typename Op>
Real binary(const Real& a, const Real& b, Op op) {
    Real out(std::max(a.bits(), b.bits()));
    op(out.get(), a.get(), b.get(), MPFR_RNDN);
    return out;
}

}  // namespace

std::string Real::str(int significant) const { return render("%.*RNg", significant, v_); }

std::string Real::fixed(int decimals) const { return render("%.*RNf", decimals, v_); }

Real Real::operator-() const {
    Real out(bits());
    mpfr_neg(out.v_, v_, MPFR_RNDN);
    return out;
}

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator*(const Real& a, long b) {
    Real out(a.bits());
    mpfr_mul_si(out.v_, a.v_, b, MPFR_RNDN);
    return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    if (c < 0) return std::partial_ordering::less;
    if (c > 0) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
}

Real abs(const Real& x) {
    Real out(x.bits());
    mpfr_abs(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real sqrt(const Real& x) {
    Real out(x.bits());
    mpfr_sqrt(out.get(), x.get(), MPFR_RNDN);
    return out;
}

Real pow(const Real& x, long n) {
    Real out(x.bits());
    mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
    return out;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real exp2(long e, mpfr_prec_t bits) {
    Real out(bits);
    mpfr_set_ui_2exp(out.get(), 1, e, MPFR_RNDN);
    return out;
}

}  // namespace tribokit
