#include <gtest/gtest.h>

#include <set>

#include <ftsched/ftsched.hpp>

#include "support/reference.hpp"

namespace ftsched {
namespace {

TEST(TwoPoolLowerBound, EqualPools)
{
    // Splits (1,3), (2,2), (3,1), each term evaluated on its own.
    const std::int64_t by_split[] = {
        std::min(h_eval(1, 0, 4), h_eval(3, 2, 4)),
        std::min(h_eval(2, 1, 4), h_eval(2, 1, 4)),
        std::min(h_eval(3, 2, 4), h_eval(1, 0, 4)),
    };
    EXPECT_EQ(by_split[0], 0);
    EXPECT_EQ(by_split[1], 2);
    EXPECT_EQ(by_split[2], 0);

    const TwoPoolBound b = two_pool_lower_bound({4, 4, 4, 1, 1});
    EXPECT_EQ(b.value, 2);
    ASSERT_TRUE(b.split);
    EXPECT_EQ(b.split->first, 2);
    EXPECT_EQ(b.split->second, 2);
}

TEST(TwoPoolLowerBound, NoSpareProcessors)
{
    EXPECT_EQ(two_pool_lower_bound({4, 4, 2, 1, 1}).value, 0);
    EXPECT_EQ(two_pool_lower_bound({6, 3, 5, 3, 2}).value, 0);
    EXPECT_EQ(two_pool_lower_bound({9, 9, 7, 4, 3}).value, 0);
}

TEST(TwoPoolLowerBound, NoAdmissibleSplit)
{
    const TwoPoolBound b = two_pool_lower_bound({1, 1, 4, 1, 1});
    EXPECT_EQ(b.value, 0);
    EXPECT_FALSE(b.split);
}

TEST(TwoPoolLowerBound, DegeneratesToSinglePool)
{
    for (std::int64_t N1 = 1; N1 <= 20; ++N1) {
        for (std::int64_t n = 2; n <= N1; ++n) {
            for (std::int64_t g1 = 1; g1 < n; ++g1) {
                EXPECT_EQ(two_pool_lower_bound({N1, 0, n, g1, 0}).value, h_eval(n, n - g1, N1));
            }
        }
    }
}

// With a huge type-2 pool the bound is capped by what type 1 alone allows.
TEST(TwoPoolLowerBound, LimitedByScarceType)
{
    for (std::int64_t N1 = 2; N1 <= 10; ++N1) {
        const TwoPoolParams tp{N1, 1000, 8, 1, 1};
        const TwoPoolBound b = two_pool_lower_bound(tp);
        std::int64_t type1_best = 0;
        for (std::int64_t n1 = 1; n1 <= std::min<std::int64_t>(N1, 7); ++n1) {
            type1_best = std::max(type1_best, h_eval(n1, n1 - 1, N1));
        }
        EXPECT_LE(b.value, type1_best);
        EXPECT_LE(b.value, h_eval(b.split->first, b.split->first - 1, N1));
    }
}

TEST(TwoPoolLowerBound, RejectsInvalid)
{
    EXPECT_THROW(two_pool_lower_bound({4, 4, 2, 2, 1}), InvalidInput);
    EXPECT_THROW(two_pool_lower_bound({4, 4, 2, 0, 0}), InvalidInput);
    EXPECT_THROW(two_pool_lower_bound({-1, 4, 2, 1, 0}), InvalidInput);
}

TEST(TwoPoolBruteOptimum, SingleTypeMatchesH)
{
    for (std::int64_t N = 2; N <= 5; ++N) {
        for (std::int64_t n = 2; n <= N; ++n) {
            for (std::int64_t f = 1; f < n; ++f) {
                EXPECT_EQ(static_cast<std::int64_t>(two_pool_brute_optimum({N, 0, n, n - f, 0})), h_eval(n, f, N));
            }
        }
    }
}

TEST(TwoPoolBruteOptimum, AtLeastTheBound)
{
    for (const TwoPoolParams tp : {TwoPoolParams{2, 2, 2, 1, 1}, TwoPoolParams{3, 2, 3, 1, 1},
                                   TwoPoolParams{3, 3, 3, 1, 1}, TwoPoolParams{3, 3, 4, 1, 1}}) {
        EXPECT_GE(static_cast<std::int64_t>(two_pool_brute_optimum(tp)), two_pool_lower_bound(tp).value);
    }
}

reference::Support support_of(const GameValue& v)
{
    return reference::Support(v.strategy_support.begin(), v.strategy_support.end());
}

TEST(OnlineGameValue, DeterministicMatchesH)
{
    const GameValue v = online_game_value({4, 2, 1}, GameMode::Deterministic);
    EXPECT_EQ(v.value, 2);
    ASSERT_EQ(v.strategy_support.size(), 1U);
    EXPECT_EQ(v.strategy_support[0].second, 1);
    EXPECT_EQ(minimal_survival_time(v.strategy_support[0].first), 2U);

    for (const GameParams p : {GameParams{3, 2, 1}, GameParams{4, 3, 1}, GameParams{5, 4, 2}, GameParams{3, 3, 2}}) {
        EXPECT_EQ(online_game_value(p, GameMode::Deterministic).value, optimum_survival_time(p));
    }
}

TEST(OnlineGameValue, RandomizedSmallGames)
{
    const GameValue v = online_game_value({4, 2, 1}, GameMode::Randomized);
    EXPECT_EQ(v.value, Rational(9, 4));
    EXPECT_EQ(reference::online_best_response_value(support_of(v)), v.value);

    Rational total = 0;
    for (const auto& [schedule, prob] : v.strategy_support) {
        EXPECT_GT(prob, 0);
        EXPECT_FALSE(validate_schedule(schedule));
        total += prob;
    }
    EXPECT_EQ(total, 1);
}

TEST(OnlineGameValue, SingleSetGameIsF)
{
    for (std::int64_t n = 2; n <= 5; ++n) {
        for (std::int64_t f = 1; f < n; ++f) {
            EXPECT_EQ(online_game_value({n, n, f}, GameMode::Randomized).value, f);
        }
    }
}

TEST(OnlineGameValue, RandomizationHelpsWithinBounds)
{
    for (const GameParams p : {GameParams{3, 2, 1}, GameParams{4, 3, 1}, GameParams{4, 3, 2}, GameParams{5, 4, 1},
                               GameParams{5, 4, 2}, GameParams{5, 4, 3}}) {
        const GameValue r = online_game_value(p, GameMode::Randomized);
        const GameValue d = online_game_value(p, GameMode::Deterministic);
        EXPECT_GE(r.value, d.value);
        EXPECT_GE(r.value, p.tolerance);
        EXPECT_LE(r.value, apriori_upper_bound(p));
        EXPECT_EQ(reference::online_best_response_value(support_of(r)), r.value);
    }
}

// The adversary mix caps every pure schedule, not just orbit representatives,
// so the value is also an upper bound.
TEST(OnlineGameValue, AdversaryMixCapsEverySchedule)
{
    for (const GameParams p : {GameParams{4, 2, 1}, GameParams{4, 3, 2}, GameParams{5, 4, 2}}) {
        const OnlineGame game(p);
        const GameValue r = online_game_value(p, GameMode::Randomized);
        Rational best = 0;
        OnlineGame::PureSchedule s(game.horizon(), 0);
        for (bool more = true; more;) {
            Rational value = 0;
            for (const auto& [adv, prob] : r.adversary_support) {
                value += prob * game.symmetric_payoff(s, adv);
            }
            best = std::max(best, value);
            std::size_t i = s.size();
            while (i > 0 && s[i - 1] + 1 == game.sets().size()) {
                s[--i] = 0;
            }
            more = i > 0;
            if (more) {
                ++s[i - 1];
            }
        }
        EXPECT_EQ(best, r.value) << p.pool << "," << p.active << "," << p.tolerance;
    }
}

TEST(OnlineGame, OrbitRepresentativesCoverEverySchedule)
{
    const OnlineGame game({4, 2, 1});
    EXPECT_EQ(game.relabelings(), 24U);
    std::set<OnlineGame::PureSchedule> seen;
    std::size_t total = 0;
    OnlineGame::PureSchedule s(4, 0);
    for (bool more = true; more;) {
        seen.insert(game.canonical(s));
        ++total;
        std::size_t i = s.size();
        while (i > 0 && s[i - 1] + 1 == game.sets().size()) {
            s[--i] = 0;
        }
        more = i > 0;
        if (more) {
            ++s[i - 1];
        }
    }
    EXPECT_EQ(total, 1296U);
    const auto& reps = game.orbit_representatives();
    EXPECT_EQ(std::vector<OnlineGame::PureSchedule>(seen.begin(), seen.end()), reps);

    Rational mass = 0;
    const auto spread = game.symmetrize({{reps[1], Rational(1)}});
    for (const auto& [sched, prob] : spread) {
        EXPECT_EQ(game.canonical(sched), reps[1]);
        mass += prob;
    }
    EXPECT_EQ(mass, 1);
}

TEST(OnlineGameValue, Guards)
{
    EXPECT_THROW(online_game_value({6, 5, 1}, GameMode::Randomized), InvalidInput);
    EXPECT_THROW(online_game_value({5, 2, 1}, GameMode::Randomized), InvalidInput);
    EXPECT_THROW(online_game_value({4, 2, 2}, GameMode::Randomized), InvalidInput);
}

TEST(OnlineGame, PayoffMatchesSurvivalTime)
{
    const OnlineGame game({4, 2, 1});
    const Schedule batch = trivial_schedule({4, 2, 1});
    const auto encoded = game.encode(batch);
    EXPECT_EQ(game.decode(encoded), batch);

    OnlineAdversary adv;
    adv.moves[{encoded[0]}] = 2;
    adv.moves[{encoded[0], encoded[1]}] = 3;
    adv.moves[{encoded[0], encoded[1], encoded[2]}] = 4;
    EXPECT_EQ(game.payoff(encoded, adv), survival_time(batch, {{2, 3, 4, 3}}));
}

} // namespace
} // namespace ftsched
