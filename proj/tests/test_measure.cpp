#include "reference.hpp"

#include "selfconv/errors.hpp"
#include "selfconv/measure.hpp"
#include "selfconv/specfun.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace selfconv;
using specfun::kPi;

namespace {

SequenceParams P(const std::string& s) { return parse_params(s); }

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidParams;
}

double atom_weight_at(const SpectralMeasure& mu, double loc) {
    double w = 0;
    for (const auto& a : mu.atoms)
        if (std::abs(a.location - loc) < 1e-12) w += a.weight;
    return w;
}

}  // namespace

TEST(Measure, DensitiesMatchReference) {
    for (const auto& c : reference()["densities"]) {
        const std::string alpha = c["alpha"];
        const auto mu = build_measure(P(alpha));
        ASSERT_TRUE(mu.has_density()) << alpha;
        const auto& xs = c["x"];
        const auto& ds = c["density"];
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            EXPECT_TRUE(close_rel(mu.density(x), ds[i], 1e-9)) << alpha << " x=" << x << " got " << mu.density(x)
                                                               << " want " << ds[i].get<double>();
        }
    }
}

TEST(Measure, GenericAgreesWithClosedForms) {
    for (const char* alpha : {"1,-2,1", "6,-8,1", "6,-4,-1", "2,-4,1", "2,-2,1", "2,0,-1", "1,-3,2"}) {
        const auto p = P(alpha);
        const auto special = build_measure(p);
        const auto generic = build_generic_measure(chgf_params(p));
        EXPECT_NE(special.family, MeasureFamily::Generic) << alpha;
        for (double x = 0.1; x <= 20; x *= 1.37)
            EXPECT_TRUE(close_rel(special.density(x), generic.density(x), 1e-7)) << alpha << " x=" << x;
    }
}

TEST(Measure, ClosedFormsInOriginalVariable) {
    const double x = 2.7;
    const auto airy = build_measure(P("6,-8,1"));
    EXPECT_NEAR(airy.density(x), closed_form::airy_density(x), 1e-12 * airy.density(x));
    const auto ei = build_measure(P("1,-2,1"));
    const double e = specfun::ei(x);
    EXPECT_NEAR(ei.density(x), std::exp(x) / x / (e * e + kPi * kPi), 1e-12 * ei.density(x));
    EXPECT_NEAR(closed_form::ei_class_density(2, x),
                std::exp(x) / (x * x) * 0.5 / (std::pow(specfun::ei_m(2, x), 2) + kPi * kPi), 1e-12);
    EXPECT_NEAR(closed_form::gamma_density(0.0, x), std::exp(-x), 1e-15);
}

TEST(Measure, OriginAtoms) {
    EXPECT_DOUBLE_EQ(atom_weight_at(build_measure(P("1,-3,2")), 0.0), 0.5);
    EXPECT_NEAR(atom_weight_at(build_measure(P("1,-4,3")), 0.0), 2.0 / 3, 1e-15);
    EXPECT_TRUE(build_measure(P("6,-8,1")).atoms.empty());
}

TEST(Measure, BesselFamily) {
    const auto three_halves = build_measure(P("1,1,-1"));
    ASSERT_EQ(three_halves.atoms.size(), 1u);
    EXPECT_DOUBLE_EQ(three_halves.atoms[0].location, 2.0);
    EXPECT_DOUBLE_EQ(three_halves.atoms[0].weight, 1.0);

    const auto half = bessel_measure(Rational(1, 2));
    for (double x : {0.1, 1.0, 7.0}) EXPECT_NEAR(half.density(x), std::exp(-x), 1e-14);

    const auto zero = bessel_measure(0);
    for (double x : {0.05, 1.0, 12.0}) {
        const auto ik = specfun::bessel_ik(0, x / 2);
        const double want = (2 / x) / (ik.k * ik.k + kPi * kPi * ik.i * ik.i);
        EXPECT_NEAR(zero.density(x), want, 1e-12 * want) << x;
    }

    // nu = 1/3 scaled by 6 is the Airy measure
    const auto third = bessel_measure(Rational(1, 3));
    for (double x : {0.3, 3.0, 18.0})
        EXPECT_NEAR(third.density(x / 6) / 6, closed_form::airy_density(x), 1e-10 * closed_form::airy_density(x));

    EXPECT_EQ(code_of([] { bessel_measure(2); }), ErrorCode::OutOfRegularRange);
}

TEST(Measure, HalfZeroConstants) {
    for (int r = 0; r <= 20; ++r)
        EXPECT_NEAR(closed_form::d_r_elementary(r), closed_form::d_r_digamma(r),
                    1e-12 * std::max(1.0, std::abs(closed_form::d_r_digamma(r))))
            << r;
}

TEST(Measure, TailAsymptote) {
    const auto airy = tail_asymptote(chgf_params(P("6,-8,1")));
    EXPECT_NEAR(airy.exponent, 0.0, 1e-15);
    EXPECT_NEAR(airy.rate, 1.0 / 6, 1e-15);
    // (1/6) / (Gamma(7/6) Gamma(5/6)) = 1/(2 pi)
    EXPECT_NEAR(airy.amplitude, 1 / (2 * kPi), 1e-14);
    EXPECT_NEAR(tail_asymptote(chgf_params(P("6,-4,-1"))).exponent, airy.exponent, 1e-15);

    const auto mu = build_measure(P("1,-2,1"));
    const double x = 60;
    const auto t = *mu.tail;
    EXPECT_NEAR(mu.density(x) / (t.amplitude * std::pow(x, t.exponent) * std::exp(-t.rate * x)), 1.0, 0.05);

    EXPECT_EQ(code_of([] { tail_asymptote(ChgfParams{1, -2, Rational(1, 2)}); }), ErrorCode::PolynomialDegenerate);
}

TEST(Measure, RegularDensitiesPositive) {
    for (const char* alpha : {"6,-8,1", "6,-4,-1", "1,-2,1", "2,-3,1", "2,-4,1", "2,0,-1", "2,-2,1"}) {
        const auto mu = build_measure(P(alpha));
        for (double x = 1e-3; x <= 50; x *= 1.2) EXPECT_GT(mu.density(x), 0.0) << alpha << " x=" << x;
    }
}

TEST(Measure, SignFlipRecordedAsScale) {
    const auto mu = build_measure(P("-1,-2,3"));
    EXPECT_EQ(mu.scale, -1.0);
}

TEST(Measure, Errors) {
    EXPECT_EQ(code_of([] { build_measure(P("0,1,1")); }), ErrorCode::AlgebraicClass);
}

TEST(Algebraic, Regimes) {
    const auto pos = std::get<SpectralMeasure>(algebraic_measure(1));
    EXPECT_NEAR(pos.support_lo, 3 - 2 * std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(pos.support_hi, 3 + 2 * std::sqrt(2.0), 1e-14);

    const auto cat = std::get<SpectralMeasure>(algebraic_measure(0));
    EXPECT_NEAR(cat.density(1.0), std::sqrt(3.0) / (2 * kPi), 1e-15);
    EXPECT_DOUBLE_EQ(cat.support_hi, 4.0);

    const auto mid = std::get<SpectralMeasure>(algebraic_measure(Rational(-1, 2)));
    EXPECT_NEAR(atom_weight_at(mid, 0.0), 0.5, 1e-15);

    const auto minus_one = std::get<SpectralMeasure>(algebraic_measure(-1));
    EXPECT_FALSE(minus_one.has_density());
    EXPECT_DOUBLE_EQ(atom_weight_at(minus_one, 0.0), 1.0);

    const auto c = std::get<ComplexContour>(algebraic_measure(Rational(-3, 2)));
    EXPECT_NEAR(c.abar, std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(c.origin_weight, 1.5, 1e-15);

    const auto two = std::get<ComplexContour>(algebraic_measure(-2));
    EXPECT_EQ(two.first_valid_n, 2);
    EXPECT_TRUE(std::holds_alternative<ComplexContour>(algebraic_measure(-3)));
}

TEST(Algebraic, MeasureForScalesByAlpha3) {
    const auto m = measure_for(P("0,2,2"));
    ASSERT_TRUE(std::holds_alternative<SpectralMeasure>(m));
    EXPECT_DOUBLE_EQ(std::get<SpectralMeasure>(m).scale, 2.0);
}

TEST(LaguerreComb, Atoms) {
    const auto two = laguerre_comb(0, 2);
    ASSERT_EQ(two.atoms.size(), 2u);
    EXPECT_NEAR(two.atoms[0].location, 2 - std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(two.atoms[1].location, 2 + std::sqrt(2.0), 1e-14);
    EXPECT_DOUBLE_EQ(two.atoms[0].weight, 0.5);
    EXPECT_FALSE(two.has_density());

    const auto one = laguerre_comb(0, 1);
    ASSERT_EQ(one.atoms.size(), 1u);
    EXPECT_NEAR(one.atoms[0].location, 1.0, 1e-15);

    EXPECT_EQ(code_of([] { laguerre_comb(-4, 3); }), ErrorCode::ComplexRoots);
}
