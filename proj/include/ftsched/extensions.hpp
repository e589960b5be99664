#ifndef FTSCHED_EXTENSIONS_HPP
#define FTSCHED_EXTENSIONS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "game.hpp"
#include "matrix_game.hpp"
#include "oracle.hpp"
#include "survival.hpp"

namespace ftsched {

// ---------------------------------------------------------------------------
// Two processor types
// ---------------------------------------------------------------------------

/// Disjoint pools of N1 type-1 and N2 type-2 processors; n processors operate
/// at a time and at least g1 type-1 and g2 type-2 of them must be non-faulty.
struct TwoPoolParams {
    std::int64_t pool1 = 0;  // N1
    std::int64_t pool2 = 0;  // N2
    std::int64_t active = 0; // n
    std::int64_t quorum1 = 0; // g1
    std::int64_t quorum2 = 0; // g2
};

inline void validate(const TwoPoolParams& tp)
{
    detail::require(tp.pool1 >= 0 && tp.pool2 >= 0, "pool sizes must be nonnegative");
    detail::require(tp.active >= 1, "n must be positive");
    detail::require(tp.quorum1 >= 0 && tp.quorum2 >= 0, "quorums must be nonnegative");
    detail::require(tp.quorum1 + tp.quorum2 >= 1, "at least one quorum must be positive");
    detail::require(tp.quorum1 + tp.quorum2 <= tp.active, "g1 + g2 must not exceed n");
}

struct TwoPoolBound {
    std::int64_t value = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> split; // maximizing (n1, n2)
};

/// max over n1 + n2 = n, g_i <= n_i <= N_i, of
/// min(h_{n1, n1-g1}(N1), h_{n2, n2-g2}(N2)).
/// A type with g_i = 0 never causes a failure and drops out of the minimum.
inline TwoPoolBound two_pool_lower_bound(const TwoPoolParams& tp)
{
    validate(tp);
    auto term = [](std::int64_t used, std::int64_t quorum, std::int64_t pool) -> std::optional<std::int64_t> {
        if (quorum == 0) {
            return std::nullopt;
        }
        return h_eval(used, used - quorum, pool);
    };

    TwoPoolBound best;
    for (std::int64_t n1 = 0; n1 <= tp.active; ++n1) {
        const std::int64_t n2 = tp.active - n1;
        if (n1 < tp.quorum1 || n1 > tp.pool1 || n2 < tp.quorum2 || n2 > tp.pool2) {
            continue;
        }
        const auto t1 = term(n1, tp.quorum1, tp.pool1);
        const auto t2 = term(n2, tp.quorum2, tp.pool2);
        const std::int64_t value = t1 && t2 ? std::min(*t1, *t2) : (t1 ? *t1 : *t2);
        if (!best.split || value > best.value) {
            best = {value, std::make_pair(n1, n2)};
        }
    }
    return best;
}

/// Exact two-pool optimum by search over schedule prefixes, for probing how
/// tight the lower bound is. Type-1 ids are 1..N1, type-2 ids follow.
inline std::size_t two_pool_brute_optimum(const TwoPoolParams& tp, const SearchBudget& budget = {})
{
    validate(tp);
    const std::int64_t total = tp.pool1 + tp.pool2;
    detail::require(total <= 20 && tp.active <= total, "two-pool search needs n <= N1 + N2 <= 20");
    const std::uint64_t type1 = (std::uint64_t{1} << tp.pool1) - 1;
    const std::uint64_t type2 = ((std::uint64_t{1} << total) - 1) & ~type1;

    std::vector<std::uint64_t> masks;
    for (const auto& set : all_sets(static_cast<int>(total), static_cast<int>(tp.active))) {
        std::uint64_t m = 0;
        for (ProcessorId id : set) {
            m |= std::uint64_t{1} << (id - 1);
        }
        masks.push_back(m);
    }
    auto fails = [&](std::uint64_t set, std::uint64_t dead) {
        const std::uint64_t alive = set & ~dead;
        return std::popcount(alive & type1) < tp.quorum1 || std::popcount(alive & type2) < tp.quorum2;
    };

    std::uint64_t states = 0;
    std::size_t best = 0;
    auto visit = [&](auto&& self, const std::vector<std::uint64_t>& reachable, std::size_t depth) -> void {
        if (++states > budget.max_states) {
            throw BudgetExceeded("two-pool search exceeded max_states=" + std::to_string(budget.max_states));
        }
        best = std::max(best, depth);
        if (depth == static_cast<std::size_t>(total)) {
            return;
        }
        for (std::uint64_t set : masks) {
            std::vector<std::uint64_t> next;
            bool killable = fails(set, 0);
            for (std::uint64_t dead : reachable) {
                for (std::uint64_t bits = set; bits != 0 && !killable; bits &= bits - 1) {
                    const std::uint64_t after = dead | (bits & (~bits + 1));
                    killable = fails(set, after);
                    next.push_back(after);
                }
                if (killable) {
                    break;
                }
            }
            if (killable) {
                continue;
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            self(self, next, depth + 1);
        }
    };
    visit(visit, std::vector<std::uint64_t>{0}, 0);
    return best;
}

// ---------------------------------------------------------------------------
// Randomized scheduler against an on-line adversary
// ---------------------------------------------------------------------------

enum class GameMode { Deterministic, Randomized };

/// Pure on-line adversary. At time t it sees S_1..S_t and its own earlier
/// kills; since it is deterministic, the kills are a function of the sets
/// seen, so a strategy maps set-index prefixes to the processor to kill.
/// Prefixes without an entry kill the lowest-id live member of S_t.
struct OnlineAdversary {
    std::map<std::vector<std::size_t>, ProcessorId> moves;

    friend bool operator==(const OnlineAdversary&, const OnlineAdversary&) = default;
};

struct GameValue {
    Rational value;
    GameMode mode = GameMode::Randomized;
    std::vector<std::pair<Schedule, Rational>> strategy_support;
    // Randomized mode: each adversary stands for the uniform mix over its
    // relabelings by processor permutations.
    std::vector<std::pair<OnlineAdversary, Rational>> adversary_support;
    std::size_t iterations = 0;
};

/// Tiny instance of the on-line game: every pure schedule is a length-N
/// sequence of indices into `sets`.
class OnlineGame {
public:
    static constexpr std::size_t max_distinct_sets = 6;
    static constexpr std::int64_t max_pool = 5;

    explicit OnlineGame(const GameParams& p) : p_(p)
    {
        validate(p);
        detail::require(p.pool <= max_pool, "on-line game supports N <= 5");
        sets_ = all_sets(static_cast<int>(p.pool), static_cast<int>(p.active));
        detail::require(sets_.size() <= max_distinct_sets, "on-line game supports at most 6 distinct sets");
        for (const auto& s : sets_) {
            std::uint64_t m = 0;
            for (ProcessorId id : s) {
                m |= std::uint64_t{1} << (id - 1);
            }
            masks_.push_back(m);
        }

        std::vector<ProcessorId> perm(static_cast<std::size_t>(p.pool));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            std::vector<std::size_t> image;
            for (const auto& set : sets_) {
                ProcessorSet moved;
                for (ProcessorId id : set) {
                    moved.push_back(perm[static_cast<std::size_t>(id - 1)]);
                }
                std::sort(moved.begin(), moved.end());
                image.push_back(static_cast<std::size_t>(std::find(sets_.begin(), sets_.end(), moved) - sets_.begin()));
            }
            set_image_.push_back(std::move(image));
        } while (std::next_permutation(perm.begin(), perm.end()));

        PureSchedule s(horizon(), 0);
        do {
            if (canonical(s) == s) {
                representatives_.push_back(s);
            }
        } while (next_schedule(s));
    }

    using PureSchedule = std::vector<std::size_t>;
    using Mix = std::vector<std::pair<PureSchedule, Rational>>;

    [[nodiscard]] const GameParams& params() const noexcept { return p_; }
    [[nodiscard]] const std::vector<ProcessorSet>& sets() const noexcept { return sets_; }
    [[nodiscard]] std::size_t horizon() const noexcept { return static_cast<std::size_t>(p_.pool); }
    [[nodiscard]] std::size_t relabelings() const noexcept { return set_image_.size(); }

    /// Image of `s` under the `perm`-th permutation of processor ids.
    [[nodiscard]] PureSchedule relabel(const PureSchedule& s, std::size_t perm) const
    {
        PureSchedule out;
        for (std::size_t i : s) {
            out.push_back(set_image_[perm][i]);
        }
        return out;
    }

    /// Lexicographically smallest relabeling of `s`.
    [[nodiscard]] PureSchedule canonical(const PureSchedule& s) const
    {
        PureSchedule best = s;
        for (std::size_t perm = 0; perm < relabelings(); ++perm) {
            best = std::min(best, relabel(s, perm));
        }
        return best;
    }

    /// One canonical schedule per orbit, in lexicographic order.
    [[nodiscard]] const std::vector<PureSchedule>& orbit_representatives() const noexcept { return representatives_; }

    /// Spreads each entry uniformly over its relabelings, merging duplicates.
    [[nodiscard]] Mix symmetrize(const Mix& mix) const
    {
        std::map<PureSchedule, Rational> merged;
        const Rational share(1, static_cast<long long>(relabelings()));
        for (const auto& [s, prob] : mix) {
            for (std::size_t perm = 0; perm < relabelings(); ++perm) {
                merged[relabel(s, perm)] += prob * share;
            }
        }
        return {merged.begin(), merged.end()};
    }

    [[nodiscard]] PureSchedule encode(const Schedule& s) const
    {
        detail::require(s.length() == horizon(), "pure schedules have length N");
        PureSchedule out;
        for (const auto& set : s.sets) {
            ProcessorSet sorted = set;
            std::sort(sorted.begin(), sorted.end());
            const auto it = std::find(sets_.begin(), sets_.end(), sorted);
            detail::require(it != sets_.end(), "set is not an n-subset of the pool");
            out.push_back(static_cast<std::size_t>(it - sets_.begin()));
        }
        return out;
    }

    [[nodiscard]] Schedule decode(const PureSchedule& s) const
    {
        Schedule out{p_, {}};
        for (std::size_t i : s) {
            out.sets.push_back(sets_[i]);
        }
        return out;
    }

    [[nodiscard]] ProcessorId default_kill(std::size_t set_index, std::uint64_t dead) const
    {
        for (ProcessorId id : sets_[set_index]) {
            if ((dead >> (id - 1) & 1) == 0) {
                return id;
            }
        }
        return sets_[set_index].front();
    }

    /// Survival time of a pure schedule against a pure on-line adversary.
    [[nodiscard]] std::size_t payoff(const PureSchedule& s, const OnlineAdversary& a) const
    {
        std::uint64_t dead = 0;
        PureSchedule prefix;
        for (std::size_t t = 1; t <= s.size(); ++t) {
            prefix.push_back(s[t - 1]);
            const auto it = a.moves.find(prefix);
            const ProcessorId kill = it != a.moves.end() ? it->second : default_kill(s[t - 1], dead);
            dead |= std::uint64_t{1} << (kill - 1);
            if (std::popcount(dead & masks_[s[t - 1]]) > p_.tolerance) {
                return t - 1;
            }
        }
        return s.size();
    }

    /// Average payoff of `s` over its relabelings, which equals the payoff of
    /// `s` against the uniform mix of relabeled copies of `a`.
    [[nodiscard]] Rational symmetric_payoff(const PureSchedule& s, const OnlineAdversary& a) const
    {
        long long total = 0;
        for (std::size_t perm = 0; perm < relabelings(); ++perm) {
            total += static_cast<long long>(payoff(relabel(s, perm), a));
        }
        return {total, static_cast<long long>(relabelings())};
    }

    struct BestResponse {
        OnlineAdversary adversary;
        Rational value; // expected survival time
    };

    /// Exact best on-line adversary against a scheduler mix, by backward
    /// induction over the tree of observed prefixes. Each node weighs the
    /// schedules consistent with its prefix, which is the posterior up to
    /// normalization. Values are memoized per (node, dead set).
    [[nodiscard]] BestResponse adversary_best_response(const Mix& mix) const
    {
        PrefixTree tree(*this, mix);
        BestResponse br;
        br.value = tree.children_value(0, 0);
        PureSchedule prefix;
        tree.record_moves(0, 0, prefix, br.adversary);
        return br;
    }

    struct SchedulerResponse {
        PureSchedule schedule;
        Rational value;
    };

    /// Best pure schedule against a mix of on-line adversaries, each one spread
    /// over its relabelings. The payoff is then constant on orbits, so only
    /// representatives are scanned.
    [[nodiscard]] SchedulerResponse scheduler_best_response(
        const std::vector<std::pair<OnlineAdversary, Rational>>& mix) const
    {
        SchedulerResponse best;
        bool first = true;
        for (const auto& s : representatives_) {
            Rational value = 0;
            for (const auto& [adv, prob] : mix) {
                value += prob * symmetric_payoff(s, adv);
            }
            if (first || value > best.value) {
                best = {s, value};
                first = false;
            }
        }
        return best;
    }

private:
    class PrefixTree {
    public:
        PrefixTree(const OnlineGame& game, const Mix& mix) : game_(game)
        {
            nodes_.push_back(Node{});
            for (const auto& [schedule, prob] : mix) {
                std::size_t at = 0;
                for (std::size_t set : schedule) {
                    std::size_t child = find_child(at, set);
                    if (child == nodes_.size()) {
                        nodes_.push_back(Node{set, nodes_[at].depth + 1, 0, {}, {}});
                        nodes_[at].children.emplace_back(set, child);
                    }
                    at = child;
                    nodes_[at].mass += prob;
                }
            }
            const std::size_t masks = std::size_t{1} << game.p_.pool;
            for (auto& node : nodes_) {
                node.memo.resize(masks);
            }
        }

        // Sum of prob * T over the schedules below `node`, with the kills of
        // the first `depth` steps fixed and the adversary optimal afterwards.
        Rational children_value(std::size_t node, std::uint64_t dead)
        {
            Rational total = 0;
            for (const auto& [set, child] : nodes_[node].children) {
                total += best(child, dead).first;
            }
            return total;
        }

        void record_moves(std::size_t node, std::uint64_t dead, PureSchedule& prefix, OnlineAdversary& out)
        {
            for (const auto& [set, child] : nodes_[node].children) {
                prefix.push_back(set);
                const ProcessorId kill = best(child, dead).second;
                out.moves[prefix] = kill;
                const std::uint64_t after = dead | (std::uint64_t{1} << (kill - 1));
                if (!fatal(child, after)) {
                    record_moves(child, after, prefix, out);
                }
                prefix.pop_back();
            }
        }

    private:
        struct Node {
            std::size_t set = 0;
            std::size_t depth = 0;
            Rational mass = 0;
            std::vector<std::pair<std::size_t, std::size_t>> children;
            std::vector<std::optional<std::pair<Rational, ProcessorId>>> memo;
        };

        std::size_t find_child(std::size_t node, std::size_t set) const
        {
            for (const auto& [s, child] : nodes_[node].children) {
                if (s == set) {
                    return child;
                }
            }
            return nodes_.size();
        }

        bool fatal(std::size_t node, std::uint64_t dead) const
        {
            return std::popcount(dead & game_.masks_[nodes_[node].set]) > game_.p_.tolerance;
        }

        // Optimal kill at `node` given the dead set before it, and its value.
        const std::pair<Rational, ProcessorId>& best(std::size_t node, std::uint64_t dead)
        {
            if (auto& cached = nodes_[node].memo[dead]) {
                return *cached;
            }
            const std::size_t t = nodes_[node].depth;
            std::optional<std::pair<Rational, ProcessorId>> result;
            for (ProcessorId kill : game_.sets_[nodes_[node].set]) {
                const std::uint64_t after = dead | (std::uint64_t{1} << (kill - 1));
                Rational value;
                if (fatal(node, after)) {
                    value = nodes_[node].mass * static_cast<long long>(t - 1);
                } else if (t == game_.horizon()) {
                    value = nodes_[node].mass * static_cast<long long>(t);
                } else {
                    value = children_value(node, after);
                }
                if (!result || value < result->first) {
                    result.emplace(std::move(value), kill);
                }
            }
            nodes_[node].memo[dead] = std::move(result);
            return *nodes_[node].memo[dead];
        }

        const OnlineGame& game_;
        std::vector<Node> nodes_;
    };

    bool next_schedule(PureSchedule& s) const
    {
        std::size_t i = s.size();
        while (i > 0 && s[i - 1] + 1 == sets_.size()) {
            s[i - 1] = 0;
            --i;
        }
        if (i == 0) {
            return false;
        }
        ++s[i - 1];
        return true;
    }

    GameParams p_;
    std::vector<ProcessorSet> sets_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::size_t>> set_image_; // [perm][set index]
    std::vector<PureSchedule> representatives_;
};

/// Value of max over scheduler distributions of min over on-line adversaries
/// of E[T]. Randomized mode runs a double oracle: solve the restricted matrix
/// game exactly, add each side's best response while it improves on the
/// restricted value, stop when neither does. The game is invariant under
/// relabeling processors, so both sides are restricted to relabeling-symmetric
/// mixes: rows are schedule orbits and columns are symmetrized adversaries.
/// Deterministic mode evaluates the batch schedule, which is optimal among
/// pure schedules.
inline GameValue online_game_value(const GameParams& p, GameMode mode)
{
    const OnlineGame game(p);
    GameValue out;
    out.mode = mode;

    const auto batch = game.encode(trivial_schedule(p));
    if (mode == GameMode::Deterministic) {
        const auto br = game.adversary_best_response({{batch, Rational(1)}});
        out.value = br.value;
        out.strategy_support = {{game.decode(batch), Rational(1)}};
        out.adversary_support = {{br.adversary, Rational(1)}};
        return out;
    }

    std::vector<OnlineGame::PureSchedule> schedules{game.canonical(batch)};
    std::vector<OnlineAdversary> adversaries{OnlineAdversary{}};
    std::vector<std::vector<Rational>> payoff{{game.symmetric_payoff(schedules[0], {})}};

    while (true) {
        ++out.iterations;
        const MatrixGameSolution sol = solve_zero_sum(payoff);

        OnlineGame::Mix sched_mix;
        for (std::size_t i = 0; i < schedules.size(); ++i) {
            if (sol.row_strategy[i] > 0) {
                sched_mix.emplace_back(schedules[i], sol.row_strategy[i]);
            }
        }
        std::vector<std::pair<OnlineAdversary, Rational>> adv_mix;
        for (std::size_t j = 0; j < adversaries.size(); ++j) {
            if (sol.column_strategy[j] > 0) {
                adv_mix.emplace_back(adversaries[j], sol.column_strategy[j]);
            }
        }

        sched_mix = game.symmetrize(sched_mix);
        const auto adv_br = game.adversary_best_response(sched_mix);
        const auto sched_br = game.scheduler_best_response(adv_mix);
        const bool adversary_improves = adv_br.value < sol.value;
        const bool scheduler_improves = sched_br.value > sol.value;

        if (!adversary_improves && !scheduler_improves) {
            out.value = sol.value;
            for (const auto& [s, prob] : sched_mix) {
                out.strategy_support.emplace_back(game.decode(s), prob);
            }
            out.adversary_support = std::move(adv_mix);
            return out;
        }

        if (scheduler_improves) {
            schedules.push_back(sched_br.schedule);
            std::vector<Rational> row;
            for (const auto& adv : adversaries) {
                row.push_back(game.symmetric_payoff(sched_br.schedule, adv));
            }
            payoff.push_back(std::move(row));
        }
        if (adversary_improves) {
            adversaries.push_back(adv_br.adversary);
            for (std::size_t i = 0; i < schedules.size(); ++i) {
                payoff[i].push_back(game.symmetric_payoff(schedules[i], adv_br.adversary));
            }
        }
    }
}

} // namespace ftsched

#endif
