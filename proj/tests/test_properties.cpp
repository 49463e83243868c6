#include "selfconv/exact_seq.hpp"
#include "selfconv/params.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace selfconv;

namespace {

constexpr std::size_t kTerms = 15;

struct RandomRationals {
    std::mt19937 rng;
    std::uniform_int_distribution<long> num{-9, 9};
    std::uniform_int_distribution<long> den{1, 6};

    explicit RandomRationals(unsigned seed) : rng(seed) {}

    Rational next() {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        return q;
    }
    Rational nonzero() {
        for (;;) {
            const Rational q = next();
            if (q != 0) return q;
        }
    }
    SequenceParams triple(bool alpha3_nonzero) {
        for (;;) {
            const Rational a1 = next(), a2 = next();
            const Rational a3 = alpha3_nonzero ? nonzero() : next();
            if (a1 != 0 || a2 != 0 || a3 != 0) return {a1, a2, a3};
        }
    }
};

std::vector<Rational> seq(const SequenceParams& p) { return generate_exact(p, kTerms).values; }

}  // namespace

TEST(Properties, KummerSymmetry) {
    RandomRationals gen(1);
    for (int t = 0; t < 200; ++t) {
        const auto p = gen.triple(true);
        const auto k = kummer_partner(p);
        const auto u = seq(p), w = seq(k.partner);
        for (std::size_t n = 1; n <= kTerms; ++n)
            ASSERT_EQ(u[n - 1], k.prefactor * w[n - 1] - (n == 1 ? k.n1_correction : Rational(0)))
                << p.to_string() << " n=" << n;
    }
}

TEST(Properties, ScalingLaw) {
    RandomRationals gen(2);
    for (int t = 0; t < 200; ++t) {
        const auto p = gen.triple(false);
        const Rational s = gen.nonzero();
        const auto u = seq(p), w = seq(scale(p, s));
        for (std::size_t n = 1; n <= kTerms; ++n)
            ASSERT_EQ(w[n - 1], pow(s, n - 1) * u[n - 1]) << p.to_string() << " t=" << to_string(s) << " n=" << n;
    }
}

TEST(Properties, ReciprocalInvolution) {
    RandomRationals gen(3);
    for (int t = 0; t < 1000; ++t) {
        const auto p = gen.triple(false);
        ASSERT_EQ(reciprocal(reciprocal(p)), p) << p.to_string();
    }
}

TEST(Properties, ReciprocalRiccatiClosure) {
    // f -> theta/f maps R(b1, b2, b3, b4) to R(-b4/theta, -b2, -b3, -b1 theta)
    RandomRationals gen(4);
    int checked = 0;
    while (checked < 200) {
        const auto p = gen.triple(false);
        if (p.alpha1() == 0 || p.alpha1() + p.alpha2() == 0) continue;
        const Rational s = p.alpha1() + p.alpha2();
        const Rational theta = -1 / (s * s);
        const auto r = riccati_params(p), d = riccati_params(reciprocal(p));
        ASSERT_EQ(d.beta1, -r.beta4 / theta) << p.to_string();
        ASSERT_EQ(d.beta2, -r.beta2) << p.to_string();
        ASSERT_EQ(d.beta3, -r.beta3) << p.to_string();
        ASSERT_EQ(d.beta4, -r.beta1 * theta) << p.to_string();
        ++checked;
    }
}

TEST(Properties, ReciprocalChgfMapping) {
    // (k, a, b) -> (k, a - b, -b)
    RandomRationals gen(5);
    int checked = 0;
    while (checked < 200) {
        const auto p = gen.triple(true);
        if (p.alpha1() == 0) continue;
        const auto r = reciprocal(p);
        if (r.alpha3() == 0) continue;
        const auto c = chgf_params(p), d = chgf_params(r);
        ASSERT_EQ(d.k, c.k) << p.to_string();
        ASSERT_EQ(d.a, c.a - c.b) << p.to_string();
        ASSERT_EQ(d.b, -c.b) << p.to_string();
        ++checked;
    }
}

TEST(Properties, TailExponentInvariant) {
    // 2a - b is unchanged by reciprocation
    RandomRationals gen(6);
    int checked = 0;
    while (checked < 200) {
        const auto p = gen.triple(true);
        if (p.alpha1() == 0) continue;
        const auto r = reciprocal(p);
        if (r.alpha3() == 0) continue;
        const auto c = chgf_params(p), d = chgf_params(r);
        ASSERT_EQ(2 * c.a - c.b, 2 * d.a - d.b) << p.to_string();
        ++checked;
    }
}

TEST(Properties, ClassificationScaleInvariant) {
    RandomRationals gen(7);
    for (int t = 0; t < 200; ++t) {
        const auto p = gen.triple(true);
        const Rational s = gen.nonzero();
        const auto c1 = classify(p), c2 = classify(scale(p, s));
        ASSERT_EQ(c1.cls, c2.cls) << p.to_string() << " t=" << to_string(s);
        ASSERT_EQ(c1.zero_count, c2.zero_count) << p.to_string();
    }
}
