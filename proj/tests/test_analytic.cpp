#include <cmath>

#include <doctest.h>

#include "oracles.hpp"
#include "tribokit/analytic.hpp"
#include "tribokit/seqcore.hpp"

using namespace tribokit;

namespace {

Real parse(const char* text, mpfr_prec_t bits) {
    Real r(bits);
    mpfr_set_str(r.get(), text, 10, MPFR_RNDN);
    return r;
}

double rel_gap(const Real& x, const char* reference) {
    const Real ref = parse(reference, x.bits());
    return (abs(x - ref) / abs(ref)).to_double();
}

}  // namespace

TEST_CASE("roots against the mpmath reference") {
    for (int precision : {15, 30, 38}) {
        CAPTURE(precision);
        const RootSet r = char_roots(precision);
        const double tol = std::pow(10.0, -precision);
        CHECK(rel_gap(r.alpha, oracle::kAlpha) < tol);
        CHECK(rel_gap(r.beta.re, oracle::kBetaRe) < tol);
        CHECK(rel_gap(r.beta.im, oracle::kBetaIm) < tol);
        CHECK(rel_gap(r.beta.modulus(), oracle::kBetaModulus) < tol);
        CHECK(r.gamma.re == r.beta.re);
        CHECK(r.gamma.im == -r.beta.im);
        CHECK(r.precision == precision);
    }
}

TEST_CASE("root ranges and printed digits") {
    const RootSet r = char_roots(15);
    CHECK(r.alpha > Real(1.83, 64));
    CHECK(r.alpha < Real(1.84, 64));
    CHECK(r.beta.modulus() > Real(0.73, 64));
    CHECK(r.beta.modulus() < Real(0.74, 64));
    // 1.83928675... rounded to the seven places usually quoted.
    CHECK(r.alpha.fixed(7) == "1.8392868");
    CHECK(r.beta.modulus().fixed(6) == "0.737353");
    const Real mod = r.beta.modulus();
    CHECK(abs(r.alpha * mod * mod - Real(1L, r.alpha.bits())).to_double() < 1e-12);
}

TEST_CASE("char_roots rejects low precision") {
    CHECK_THROWS_AS(char_roots(14), std::invalid_argument);
}

TEST_CASE("Vieta residuals") {
    const RootSet r15 = char_roots(15);
    const auto v15 = vieta_check(r15);
    CHECK(v15.sum_res.to_double() < 1e-12);
    CHECK(v15.pair_res.to_double() < 1e-12);
    CHECK(v15.prod_res.to_double() < 1e-14);

    for (int precision : {15, 30}) {
        const auto v = vieta_check(char_roots(precision));
        const double bound = std::pow(10.0, 1.0 - precision / 2.0);
        CHECK(v.sum_res.to_double() < bound);
        CHECK(v.pair_res.to_double() < bound);
        CHECK(v.prod_res.to_double() < bound);
    }

    RootSet perturbed = r15;
    perturbed.alpha = perturbed.alpha + Real(1e-6, perturbed.alpha.bits());
    const auto vp = vieta_check(perturbed);
    CHECK(vp.sum_res.to_double() == doctest::Approx(1e-6).epsilon(1e-6));
}

TEST_CASE("Vieta residuals do not grow with precision") {
    // Residuals can land on exact zero; compare against a floor of one ulp at
    // the lower precision.
    const int levels[] = {15, 20, 30, 50, 80};
    for (std::size_t i = 0; i + 1 < std::size(levels); ++i) {
        const RootSet lo = char_roots(levels[i]);
        const auto a = vieta_check(lo);
        const auto b = vieta_check(char_roots(levels[i + 1]));
        const double floor = std::ldexp(1.0, -static_cast<int>(lo.alpha.bits()));
        CHECK(b.sum_res.to_double() <= 10 * std::max(a.sum_res.to_double(), floor));
        CHECK(b.pair_res.to_double() <= 10 * std::max(a.pair_res.to_double(), floor));
        CHECK(b.prod_res.to_double() <= 10 * std::max(a.prod_res.to_double(), floor));
    }
}

TEST_CASE("Binet values") {
    const RootSet r = char_roots(30);
    CHECK(binet_s(0, r).to_double() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(std::abs(binet_s(5, r).to_double() - 21.0) < 1e-9);
    CHECK(std::abs(binet_s(-1, r).to_double() + 1.0) < 1e-9);
    CHECK(std::abs(binet_c(0, r).to_double() - 3.0) < 1e-12);
    CHECK(std::abs(binet_c(1, r).to_double() + 1.0) < 1e-9);
    CHECK(std::abs(binet_c(6, r).to_double() - 11.0) < 1e-8);
}

TEST_CASE("binet_round") {
    const RootSet r = char_roots(30);
    CHECK(binet_round(SequenceKind::GeneralizedLucas, 10, r) == s_lucas(10));
    CHECK(binet_round(SequenceKind::GeneralizedLucas, 10, r) == 443);
    CHECK(binet_round(SequenceKind::MinorSum, 4, r) == -5);
    CHECK(binet_round(SequenceKind::GeneralizedLucas, 0, r) == 3);
    for (Index n = 0; n <= 40; ++n) {
        REQUIRE(binet_round(SequenceKind::GeneralizedLucas, n, r) == s_lucas(n));
        REQUIRE(binet_round(SequenceKind::MinorSum, n, r) == c_seq(n));
    }
    for (Index n = -60; n <= 60; ++n) {
        REQUIRE(binet_round(SequenceKind::GeneralizedLucas, n, r) == s_lucas(n));
        REQUIRE(binet_round(SequenceKind::MinorSum, n, r) == c_seq(n));
    }
    CHECK_THROWS_AS(binet_round(SequenceKind::Tribonacci, 3, r), std::invalid_argument);
}

TEST_CASE("Binet refuses beyond its cap") {
    const RootSet r = char_roots(30);
    CHECK(binet_cap(30) == 60);
    CHECK_THROWS_AS(binet_round(SequenceKind::GeneralizedLucas, 61, r), PrecisionExhausted);
    CHECK_THROWS_AS(binet_s(-61, r), PrecisionExhausted);
    CHECK_THROWS_AS(binet_c(100, r), PrecisionExhausted);
}

TEST_CASE("Binet never mis-rounds when the cap is lifted") {
    // At 15 digits the error bound passes 1/2 around n = 50; every index must
    // either round exactly or refuse.
    const RootSet r = char_roots(15);
    Index refused_from = -1;
    for (Index n = 0; n <= 300; ++n) {
        try {
            const Integer v = binet_round(SequenceKind::GeneralizedLucas, n, r, 1000);
            REQUIRE(v == s_lucas(n));
            REQUIRE(refused_from == -1);  // once refused, larger n must refuse too
        } catch (const PrecisionExhausted&) {
            if (refused_from == -1) refused_from = n;
        }
    }
    CHECK(refused_from > binet_cap(15));
    CHECK(refused_from < 300);
}

TEST_CASE("error bound grows with n and stays certified up to the cap") {
    const RootSet r = char_roots(30);
    double prev = 0.0;
    for (Index n = 0; n <= binet_cap(30); ++n) {
        const double bn = binet_evaluate(SequenceKind::GeneralizedLucas, n, r).error_bound.to_double();
        REQUIRE(bn >= prev);
        REQUIRE(bn < 1e-6);
        prev = bn;
    }
}

TEST_CASE("Binet imaginary residual stays tiny") {
    const RootSet r = char_roots(30);
    for (Index n = -60; n <= 60; ++n) {
        const auto v = binet_evaluate(SequenceKind::MinorSum, n, r);
        REQUIRE(v.imag_residual.to_double() < 1e-12);
    }
}
