#include "tribokit/analytic.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

namespace tribokit {

Real Complex::modulus() const {
    Real out(std::max(re.bits(), im.bits()));
    mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDN);
    return out;
}

Complex Complex::inverse() const {
    const Real norm2 = re * re + im * im;
    return {re / norm2, -im / norm2};
}

Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Complex pow(const Complex& z, long n) {
    const mpfr_prec_t bits = std::max(z.re.bits(), z.im.bits());
    Complex base = n < 0 ? z.inverse() : z;
    auto e = static_cast<unsigned long>(n < 0 ? -n : n);
    Complex result{Real(1L, bits), Real(0L, bits)};
    while (e != 0) {
        if (e & 1UL) result = result * base;
        e >>= 1U;
        if (e != 0) base = base * base;
    }
    return result;
}

mpfr_prec_t working_bits(int precision) {
    return static_cast<mpfr_prec_t>(std::ceil(precision * 3.321928094887362)) + 8;
}

Index binet_cap(int precision) { return 2 * static_cast<Index>(precision); }

namespace {

// f(x) = x^3 - x^2 - x - 1 and f'(x) = 3x^2 - 2x - 1, in Horner form.
Real char_poly(const Real& x) {
    const Real one(1L, x.bits());
    return ((x - one) * x - one) * x - one;
}

Real char_poly_derivative(const Real& x) {
    const Real one(1L, x.bits());
    return (x * 3L - Real(2L, x.bits())) * x - one;
}

Real locate_alpha(mpfr_prec_t bits) {
    constexpr int kMaxIterations = 200;
    Real lo(1L, bits);
    Real hi(2L, bits);
    Real x = hi;
    // Stop once a Newton step moves x by at most 4 ulps.
    const Real tolerance = exp2(-static_cast<long>(bits) + 3, bits);
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        const Real f = char_poly(x);
        if (f.is_zero()) return x;
        if (f < Real(0L, bits)) {
            lo = x;
        } else {
            hi = x;
        }
        Real next = x - f / char_poly_derivative(x);
        if (!(lo < next && next < hi)) next = (lo + hi) / Real(2L, bits);
        const Real step = abs(next - x);
        x = next;
        if (step <= tolerance * x) return x;
    }
    throw std::runtime_error("char_roots: Newton iteration did not converge in " +
                             std::to_string(kMaxIterations) + " steps");
}

struct Bases {
    Complex a, b, c;
};

Bases binet_bases(SequenceKind kind, const RootSet& roots) {
    const mpfr_prec_t bits = roots.alpha.bits();
    const Complex alpha{roots.alpha, Real(0L, bits)};
    switch (kind) {
        case SequenceKind::GeneralizedLucas: return {alpha, roots.beta, roots.gamma};
        case SequenceKind::MinorSum:
            return {alpha * roots.beta, alpha * roots.gamma, roots.beta * roots.gamma};
        case SequenceKind::Tribonacci: break;
    }
    throw std::invalid_argument("Binet evaluation supports S and C only");
}

}  // namespace

RootSet char_roots(int precision) {
    if (precision < kMinPrecision) {
        throw std::invalid_argument("char_roots: precision must be at least " +
                                    std::to_string(kMinPrecision) + " digits");
    }
    const mpfr_prec_t bits = working_bits(precision);
    Real alpha = locate_alpha(bits);

    // Deflated quadratic: beta + gamma = 1 - alpha, beta * gamma = 1 / alpha.
    const Real one(1L, bits);
    const Real half_sum = (one - alpha) / Real(2L, bits);
    const Real neg_disc = Real(4L, bits) / alpha - (one - alpha) * (one - alpha);
    if (!(neg_disc > Real(0L, bits))) {
        throw std::runtime_error("char_roots: deflated quadratic has real roots");
    }
    const Real half_im = sqrt(neg_disc) / Real(2L, bits);
    Complex beta{half_sum, half_im};
    Complex gamma{half_sum, -half_im};
    return RootSet{std::move(alpha), std::move(beta), std::move(gamma), precision};
}

VietaResiduals vieta_check(const RootSet& roots) {
    const mpfr_prec_t bits = roots.alpha.bits();
    const Complex alpha{roots.alpha, Real(0L, bits)};
    const Complex one{Real(1L, bits), Real(0L, bits)};
    const Complex& beta = roots.beta;
    const Complex& gamma = roots.gamma;
    return VietaResiduals{
        (alpha + beta + gamma - one).modulus(),
        (alpha * beta + alpha * gamma + beta * gamma + one).modulus(),
        (alpha * beta * gamma - one).modulus(),
    };
}

BinetValue binet_evaluate(SequenceKind kind, Index n, const RootSet& roots, Index cap) {
    const Bases bases = binet_bases(kind, roots);
    if (std::llabs(n) > cap) {
        throw PrecisionExhausted("Binet index " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(cap) + " at precision " +
                                 std::to_string(roots.precision));
    }
    const mpfr_prec_t bits = roots.alpha.bits();
    const long e = static_cast<long>(n);
    const Complex sum = pow(bases.a, e) + pow(bases.b, e) + pow(bases.c, e);

    // First-order bound: each base carries relative error <= 64u from root
    // finding and the products forming it; raising to the n-th power scales
    // that by |n|, square-and-multiply adds <= 16u per bit of |n|, and the
    // final sum adds a few u. All terms are weighted by sum |base|^n.
    const Real magnitude = pow(bases.a.modulus(), e) + pow(bases.b.modulus(), e) +
                           pow(bases.c.modulus(), e);
    const auto abs_n = static_cast<unsigned long>(std::llabs(n));
    const long steps = static_cast<long>(abs_n + 1) * 64 + 16 * (std::bit_width(abs_n) + 1) + 8;
    const Real unit = exp2(1 - static_cast<long>(bits), bits);
    Real bound = magnitude * steps * unit;

    return BinetValue{sum.re, abs(sum.im), std::move(bound)};
}

BinetValue binet_evaluate(SequenceKind kind, Index n, const RootSet& roots) {
    return binet_evaluate(kind, n, roots, binet_cap(roots.precision));
}

namespace {

BinetValue checked(SequenceKind kind, Index n, const RootSet& roots, Index cap) {
    BinetValue v = binet_evaluate(kind, n, roots, cap);
    const Real limit = max(Real(1L, v.value.bits()), abs(v.value)) * Real(1e-6, v.value.bits());
    if (v.imag_residual > limit) {
        throw PrecisionExhausted("Binet sum at n = " + std::to_string(n) +
                                 " has imaginary residual " + v.imag_residual.str(6));
    }
    return v;
}

}  // namespace

Real binet_s(Index n, const RootSet& roots) {
    return checked(SequenceKind::GeneralizedLucas, n, roots, binet_cap(roots.precision)).value;
}

Real binet_c(Index n, const RootSet& roots) {
    return checked(SequenceKind::MinorSum, n, roots, binet_cap(roots.precision)).value;
}

Integer binet_round(SequenceKind kind, Index n, const RootSet& roots, Index cap) {
    const BinetValue v = checked(kind, n, roots, cap);
    const Real half(0.5, v.error_bound.bits());
    if (!(v.error_bound < half)) {
        throw PrecisionExhausted("Binet error bound " + v.error_bound.str(3) + " at n = " +
                                 std::to_string(n) + " is not below 1/2");
    }
    Real rounded(v.value.bits());
    mpfr_round(rounded.get(), v.value.get());
    Integer out;
    mpfr_get_z(out.get_mpz_t(), rounded.get(), MPFR_RNDN);
    return out;
}

Integer binet_round(SequenceKind kind, Index n, const RootSet& roots) {
    return binet_round(kind, n, roots, binet_cap(roots.precision));
}

}  // namespace tribokit
