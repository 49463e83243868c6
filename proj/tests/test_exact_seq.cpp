#include "selfconv/errors.hpp"
#include "selfconv/exact_seq.hpp"

#include <gtest/gtest.h>

#include <initializer_list>

using namespace selfconv;

namespace {

std::vector<Rational> ints(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

std::vector<Rational> gen(const char* alpha, std::size_t n) { return generate_exact(parse_params(alpha), n).values; }

}  // namespace

TEST(GenerateExact, PublishedListings) {
    EXPECT_EQ(gen("6,-8,1", 6), ints({1, 5, 60, 1105, 27120, 828250}));
    EXPECT_EQ(gen("1,-2,1", 7), ints({1, 1, 3, 13, 71, 461, 3447}));
    EXPECT_EQ(gen("2,-3,1", 7), ints({1, 2, 10, 74, 706, 8162, 110410}));
    EXPECT_EQ(gen("2,-2,1", 6), ints({1, 3, 18, 153, 1638, 20898}));
    EXPECT_EQ(gen("2,-4,1", 7), ints({1, 1, 4, 25, 208, 2146, 26368}));
    EXPECT_EQ(gen("2,0,-1", 7), ints({1, 3, 12, 63, 432, 3798, 41472}));
    EXPECT_EQ(gen("6,-4,-1", 6), ints({1, 7, 84, 1463, 33936, 990542}));
    EXPECT_EQ(gen("-1,-2,3", 12), ints({1, -1, -1, 3, 3, -21, 27, 27, -117, 27, 459, -837}));
}

TEST(GenerateExact, Factorial) { EXPECT_EQ(gen("1,0,0", 5), ints({1, 2, 6, 24, 120})); }

TEST(GenerateExact, CatalanShift) {
    EXPECT_EQ(gen("0,0,1", 10), ints({1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}));
}

TEST(GenerateExact, EmptyAndRecurrenceCheck) {
    EXPECT_TRUE(gen("1,1,1", 0).empty());
    auto s = generate_exact(parse_params("1/3,-7/5,2/9"), 15);
    EXPECT_TRUE(satisfies_recurrence(s));
    s.values[7] += 1;
    EXPECT_FALSE(satisfies_recurrence(s));
}

TEST(Derived, A005413) {
    const auto v = derived_a005413(generate_exact(parse_params("2,-2,1"), 6));
    EXPECT_EQ(v, ints({7, 72, 891, 12672, 202770}));
    EXPECT_TRUE(derived_a005413(generate_exact(parse_params("2,-2,1"), 0)).empty());
    EXPECT_THROW(derived_a005413(generate_exact(parse_params("2,-3,1"), 6)), Error);
}

TEST(Derived, A005416) {
    const auto w = derived_a005416(generate_exact(parse_params("2,-3,1"), 6));
    EXPECT_EQ(w, ints({1, 6, 50, 518, 6354, 89782}));
    try {
        derived_a005416(generate_exact(parse_params("2,-2,1"), 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongBaseSequence);
    }
}

TEST(Laguerre, TraceMatchesRecurrence) {
    for (const char* a : {"-4", "-1", "0", "1", "7/2"}) {
        const Rational alpha = parse_rational(a);
        for (std::size_t m = 1; m <= 4; ++m) {
            const auto tr = laguerre_trace(alpha, m, 12);
            const SequenceParams p(-1, 2 + alpha, Rational(static_cast<long>(m)));
            EXPECT_EQ(tr, generate_exact(p, 12).values) << a << " m=" << m;
        }
    }
}

TEST(Laguerre, TwoPointComb) {
    const auto u = laguerre_trace(0, 2, 10);
    EXPECT_EQ(u[0], 1);
    EXPECT_EQ(u[1], 2);
    EXPECT_EQ(u[2], 6);
    EXPECT_EQ(u[3], 20);
    for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(u[n - 1], 4 * u[n - 2] - 2 * u[n - 3]) << n;
}

TEST(Laguerre, CharacteristicPolynomial) {
    EXPECT_EQ(laguerre_linear_recurrence(-4, 3), ints({6, 6, 3, 1}));
    EXPECT_EQ(laguerre_linear_recurrence(0, 2), ints({2, -4, 1}));
    EXPECT_EQ(laguerre_linear_recurrence(0, 1), ints({-1, 1}));
}

TEST(Laguerre, OperatorEntries) {
    const TridiagonalOperator t{0, 2};
    const auto d = t.dense();
    EXPECT_EQ(d(0, 0), 1);
    EXPECT_EQ(d(1, 1), 3);
    EXPECT_EQ(d(0, 1), 1);
    EXPECT_EQ(d(1, 0), 1);
    EXPECT_EQ(RationalMatrix::identity(3).trace(), 3);
}
