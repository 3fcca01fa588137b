#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "singtope/singtope.hpp"

using namespace singtope;

TEST(Definite, SmallExamples)
{
    EXPECT_TRUE(is_negative_definite(make_bamboo({-2})));
    EXPECT_TRUE(is_negative_definite(make_star(-2, {{-2}, {-2}, {-2}})));
    EXPECT_FALSE(is_negative_definite(make_bamboo({-1, -1})));
    // affine D_4: determinant zero
    const auto d4t = make_star(-2, {{-2}, {-2}, {-2}, {-2}});
    EXPECT_FALSE(is_negative_definite(d4t));
    EXPECT_EQ(determinant(intersection_matrix(d4t)), 0);
    // E_8
    const auto e8 = make_star(-2, {{-2}, {-2, -2}, {-2, -2, -2, -2}});
    EXPECT_TRUE(is_negative_definite(e8));
    EXPECT_EQ(determinant(intersection_matrix(e8)), 1);
}

TEST(Definite, MinorsOfA3)
{
    const auto m = leading_principal_minors(intersection_matrix(make_bamboo({-2, -2, -2})));
    ASSERT_EQ(m.size(), 3u);
    EXPECT_EQ(m[0], -2);
    EXPECT_EQ(m[1], 3);
    EXPECT_EQ(m[2], -4);
}

TEST(Definite, AgreesWithRationalEliminationOnRandomTrees)
{
    std::mt19937 rng(17);
    int nd = 0, not_nd = 0;
    for (int t = 0; t < 2000; ++t) {
        const std::size_t n = 1 + t % 9;
        std::uniform_int_distribution<int> wd(-4, -1);
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < n; ++i) {
            vs.push_back({wd(rng), 0});
            if (i)
                es.emplace_back(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
        }
        WeightedGraph g(vs, es);
        const bool expected = oracle::ldl_negative_definite(oracle::form(g));
        ASSERT_EQ(is_negative_definite(g), expected) << emit_text(g);
        (expected ? nd : not_nd)++;
    }
    EXPECT_GT(nd, 100);
    EXPECT_GT(not_nd, 100);
}

TEST(Definite, QuadraticFormNegativeOnBoxWhenDefinite)
{
    std::mt19937 rng(23);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 5;
        std::uniform_int_distribution<int> wd(-3, -1);
        std::vector<Vertex> vs;
        std::vector<Edge> es;
        for (std::size_t i = 0; i < n; ++i) {
            vs.push_back({wd(rng), 0});
            if (i)
                es.emplace_back(std::uniform_int_distribution<std::size_t>(0, i - 1)(rng), i);
        }
        WeightedGraph g(vs, es);
        if (is_negative_definite(g)) {
            EXPECT_LT(oracle::max_quadratic(oracle::form(g), 3), 0) << emit_text(g);
        }
    }
}

TEST(Definite, GeneralSymmetricMatrices)
{
    std::mt19937 rng(29);
    std::uniform_int_distribution<int> d(-6, 3);
    for (int t = 0; t < 1000; ++t) {
        const std::size_t n = 1 + t % 6;
        IntegerMatrix m(n);
        std::vector<std::vector<std::int64_t>> o(n, std::vector<std::int64_t>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                const int v = i == j ? d(rng) - 3 : d(rng);
                m(i, j) = m(j, i) = v;
                o[i][j] = o[j][i] = v;
            }
        ASSERT_EQ(is_negative_definite(m), oracle::ldl_negative_definite(o));
    }
    IntegerMatrix asym(2);
    asym(0, 0) = -2;
    asym(1, 1) = -2;
    asym(0, 1) = 1;
    EXPECT_FALSE(is_negative_definite(asym));
}

TEST(Definite, LargeEntriesUseExactFallback)
{
    // int64 Bareiss overflows here; the result must still be exact
    const std::size_t n = 12;
    IntegerMatrix m(n);
    std::vector<std::vector<std::int64_t>> o(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = -1000000007;
        o[i][i] = -1000000007;
        if (i + 1 < n) {
            m(i, i + 1) = m(i + 1, i) = 999999999;
            o[i][i + 1] = o[i + 1][i] = 999999999;
        }
    }
    EXPECT_FALSE(detail::leading_minors_i64(m).has_value());
    EXPECT_EQ(is_negative_definite(m), oracle::ldl_negative_definite(o));
    const auto big = detail::leading_minors_big(m);
    ASSERT_EQ(big.size(), n);
    // minors follow the tridiagonal recurrence D_k = a D_{k-1} - b^2 D_{k-2}
    BigInt a = -1000000007, b2 = BigInt(999999999) * 999999999;
    BigInt prev2 = 1, prev1 = a;
    EXPECT_EQ(big[0], prev1);
    for (std::size_t k = 1; k < n; ++k) {
        BigInt cur = a * prev1 - b2 * prev2;
        EXPECT_EQ(big[k], cur);
        prev2 = prev1;
        prev1 = cur;
    }
}

TEST(Definite, DeterminantWithZeroLeadingMinor)
{
    IntegerMatrix m{{0, 1}, {1, 0}};
    EXPECT_EQ(determinant(m), -1);
    EXPECT_FALSE(is_negative_definite(m));
}
