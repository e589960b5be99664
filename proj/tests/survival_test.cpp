#include <gtest/gtest.h>

#include <ftsched/ftsched.hpp>

#include "support/reference.hpp"

namespace ftsched {
namespace {

TEST(HEval, KnownValues)
{
    EXPECT_EQ(h_eval(4, 3, 7), 5);
    EXPECT_EQ(h_eval(3, 2, 0), 0);
    EXPECT_EQ(h_eval(2, 1, 4), 2);
    EXPECT_EQ(h_eval(2, 1, 5), 2);
}

// h_{2,1}(5) against the exact optimum over every length-5 schedule for N=5.
TEST(HEval, MatchesExhaustiveScheduleSearchForN5n2f1)
{
    const GameParams p{5, 2, 1};
    const auto sets = all_sets(5, 2);
    ASSERT_EQ(sets.size(), 10U);
    std::size_t best = 0;
    std::vector<std::size_t> digit(5, 0);
    std::size_t visited = 0;
    while (true) {
        Schedule s{p, {}};
        for (std::size_t d : digit) {
            s.sets.push_back(sets[d]);
        }
        best = std::max(best, brute_adversary_min(s));
        ++visited;
        std::size_t i = 0;
        while (i < 5 && ++digit[i] == sets.size()) {
            digit[i++] = 0;
        }
        if (i == 5) {
            break;
        }
    }
    EXPECT_EQ(visited, 100000U);
    EXPECT_EQ(best, 2U);
    EXPECT_EQ(h_eval(2, 1, 5), static_cast<std::int64_t>(best));
}

TEST(HEval, RejectsBadArguments)
{
    EXPECT_THROW(h_eval(0, 0, 3), InvalidInput);
    EXPECT_THROW(h_eval(3, 3, 3), InvalidInput);
    EXPECT_THROW(h_eval(3, 4, 3), InvalidInput);
    EXPECT_THROW(h_eval(3, -1, 3), InvalidInput);
    EXPECT_THROW(h_eval(3, 1, -1), InvalidInput);
}

TEST(HEval, ZeroToleranceIsAlwaysZero)
{
    for (std::int64_t n = 1; n <= 6; ++n) {
        for (std::int64_t k = 0; k <= 30; ++k) {
            EXPECT_EQ(h_eval(n, 0, k), 0);
        }
    }
}

TEST(HEval, ArithmeticProperties)
{
    for (std::int64_t n = 1; n <= 12; ++n) {
        for (std::int64_t f = 0; f < n; ++f) {
            for (std::int64_t k = 0; k <= 80; ++k) {
                const auto h = h_eval(n, f, k);
                EXPECT_EQ(h_eval(n, f, k + n), h + f);
                EXPECT_LE(h, h_eval(n, f, k + 1));
                if (k % n == 0) {
                    EXPECT_EQ(h, k / n * f);
                }
                for (std::int64_t q = 0; q <= 2 * n; ++q) {
                    EXPECT_LE(h_eval(n, f, k + q), h + q);
                }
                for (std::int64_t l = 0; l <= n; ++l) {
                    EXPECT_LE(h, h_eval(n, f, k + l) + n - l - f);
                }
            }
        }
    }
}

TEST(OptimumSurvivalTime, Values)
{
    EXPECT_EQ(optimum_survival_time({4, 2, 1}), 2);
    EXPECT_EQ(optimum_survival_time({7, 4, 3}), 5);
    for (std::int64_t n = 2; n <= 8; ++n) {
        for (std::int64_t f = 1; f < n; ++f) {
            EXPECT_EQ(optimum_survival_time({n, n, f}), f);
        }
    }
}

TEST(OptimumSurvivalTime, RejectsInvalidGames)
{
    EXPECT_THROW(optimum_survival_time({4, 2, 0}), InvalidInput);
    EXPECT_THROW(optimum_survival_time({4, 2, 2}), InvalidInput);
    EXPECT_THROW(optimum_survival_time({3, 4, 1}), InvalidInput);
    EXPECT_THROW(apriori_upper_bound({3, 4, 1}), InvalidInput);
}

TEST(AprioriUpperBound, ValuesAndDominance)
{
    EXPECT_EQ(apriori_upper_bound({4, 2, 1}), 4);
    EXPECT_EQ(apriori_upper_bound({7, 4, 3}), 7);
    EXPECT_EQ(apriori_upper_bound({10, 3, 1}), 9);
    for (std::int64_t N = 2; N <= 40; ++N) {
        for (std::int64_t n = 2; n <= N; ++n) {
            for (std::int64_t f = 1; f < n; ++f) {
                EXPECT_LT(optimum_survival_time({N, n, f}), apriori_upper_bound({N, n, f}));
            }
        }
    }
}

} // namespace
} // namespace ftsched
