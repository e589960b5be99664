#ifndef FTSCHED_ORACLE_HPP
#define FTSCHED_ORACLE_HPP

// Exhaustive reference implementations. They follow the game definitions
// directly and are meant for desk-scale instances only.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "adversary_solver.hpp"
#include "errors.hpp"
#include "game.hpp"
#include "matching.hpp"

namespace ftsched {

struct SearchBudget {
    std::uint64_t max_states = 100'000'000;
    bool symmetry_pruning = true;
};

/// All n-subsets of {1..N} in lexicographic order.
inline std::vector<ProcessorSet> all_sets(int pool, int active)
{
    detail::require(active >= 0 && active <= pool, "need 0 <= n <= N");
    std::vector<ProcessorSet> out;
    ProcessorSet cur(static_cast<std::size_t>(active));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.push_back(cur);
        int i = active - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == pool - active + i + 1) {
            --i;
        }
        if (i < 0) {
            break;
        }
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < active; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

namespace detail {

class AdversaryEnumerator {
public:
    explicit AdversaryEnumerator(const Schedule& s)
        : s_(s), dead_count_(static_cast<std::size_t>(s.params.pool) + 1, 0), best_(s.length())
    {
    }

    std::size_t run()
    {
        visit(1);
        return best_;
    }

private:
    void visit(std::size_t t)
    {
        // Any violation from here on leaves survival >= t - 1.
        if (t > s_.length() || t - 1 >= best_) {
            return;
        }
        for (ProcessorId kill : s_.at(t)) {
            ++dead_count_[static_cast<std::size_t>(kill)];
            std::int64_t faulty = 0;
            for (ProcessorId p : s_.at(t)) {
                faulty += dead_count_[static_cast<std::size_t>(p)] > 0 ? 1 : 0;
            }
            if (faulty > s_.params.tolerance) {
                best_ = std::min(best_, t - 1);
            } else {
                visit(t + 1);
            }
            --dead_count_[static_cast<std::size_t>(kill)];
        }
    }

    const Schedule& s_;
    std::vector<int> dead_count_;
    std::size_t best_;
};

} // namespace detail

/// min over all n^T adversaries of survival_time, by enumeration with early cutoff.
inline std::size_t brute_adversary_min(const Schedule& s, std::size_t max_length = 10, std::int64_t max_active = 4)
{
    require_valid(s);
    if (s.length() > max_length || s.params.active > max_active) {
        throw BudgetExceeded("schedule too large for exhaustive adversary search");
    }
    return detail::AdversaryEnumerator(s).run();
}

namespace detail {

// Depth-first search over schedule prefixes that survive every adversary.
// Liveness is tracked with the set of dead-processor sets reachable by some
// adversary, straight from the game definition.
class OptimumSearch {
public:
    OptimumSearch(const GameParams& p, const SearchBudget& budget)
        : p_(p), budget_(budget)
    {
        for (const auto& set : all_sets(static_cast<int>(p.pool), static_cast<int>(p.active))) {
            std::uint64_t mask = 0;
            int top = 0;
            for (ProcessorId id : set) {
                mask |= std::uint64_t{1} << (id - 1);
                top = std::max(top, id);
            }
            masks_.push_back(mask);
            tops_.push_back(top);
        }
    }

    std::size_t run()
    {
        visit({0}, 0, 0);
        return best_;
    }

private:
    // True if the new ids of the set are exactly seen+1..seen+k.
    bool canonical(std::size_t set_index, int seen) const
    {
        const std::uint64_t fresh = masks_[set_index] >> seen;
        return (fresh & (fresh + 1)) == 0;
    }

    void visit(const std::vector<std::uint64_t>& reachable, std::size_t depth, int seen)
    {
        if (++states_ > budget_.max_states) {
            throw BudgetExceeded("brute_optimum exceeded max_states=" + std::to_string(budget_.max_states));
        }
        best_ = std::max(best_, depth);
        if (depth == static_cast<std::size_t>(p_.pool) || best_ == static_cast<std::size_t>(p_.pool)) {
            return;
        }
        for (std::size_t i = 0; i < masks_.size(); ++i) {
            if (budget_.symmetry_pruning && !canonical(i, seen)) {
                continue;
            }
            const std::uint64_t set = masks_[i];
            bool killable = false;
            for (std::uint64_t dead : reachable) {
                if (std::popcount(dead & set) >= p_.tolerance) {
                    killable = true;
                    break;
                }
            }
            if (killable) {
                continue;
            }
            std::vector<std::uint64_t> next;
            next.reserve(reachable.size() * static_cast<std::size_t>(p_.active));
            for (std::uint64_t dead : reachable) {
                for (std::uint64_t bits = set; bits != 0; bits &= bits - 1) {
                    next.push_back(dead | (bits & (~bits + 1)));
                }
            }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            visit(next, depth + 1, std::max(seen, tops_[i]));
        }
    }

    GameParams p_;
    SearchBudget budget_;
    std::vector<std::uint64_t> masks_;
    std::vector<int> tops_;
    std::uint64_t states_ = 0;
    std::size_t best_ = 0;
};

} // namespace detail

/// T_opt = max over schedules of min over adversaries of the survival time, by
/// exhaustive search. Optionally explores only prefixes whose processors are
/// labelled in order of first appearance.
inline std::size_t brute_optimum(const GameParams& p, const SearchBudget& budget = {})
{
    validate(p);
    detail::require(p.pool <= 63, "brute_optimum supports N <= 63");
    return detail::OptimumSearch(p, budget).run();
}

/// Exact minimum of |B - C| + |gamma(C)| over all subsets C of side B. Ties go
/// to the smallest subset, then to the lexicographically first one.
inline DeficiencyWitness brute_deficiency(const BipartiteGraph& g, Side b_side)
{
    const std::size_t size = g.count(b_side);
    if (size > 20) {
        throw BudgetExceeded("brute_deficiency supports |B| <= 20");
    }
    DeficiencyWitness best{b_side, {}, deficiency_value(g, b_side, {})};
    for (std::size_t k = 1; k <= size; ++k) {
        std::vector<std::size_t> c(k);
        std::iota(c.begin(), c.end(), std::size_t{0});
        while (true) {
            const std::size_t value = deficiency_value(g, b_side, c);
            if (value < best.value) {
                best = {b_side, c, value};
            }
            std::size_t i = k;
            while (i > 0 && c[i - 1] == size - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++c[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                c[j] = c[j - 1] + 1;
            }
        }
    }
    return best;
}

/// Uniformly random n-subsets of {1..N}, one per step; fixed output per seed.
inline Schedule random_schedule(const GameParams& p, std::size_t length, std::uint64_t seed)
{
    validate(p);
    detail::require(length >= 1 && static_cast<std::int64_t>(length) <= p.pool, "need 1 <= length <= N");
    std::mt19937_64 rng(seed);
    Schedule s{p, {}};
    ProcessorSet ids(static_cast<std::size_t>(p.pool));
    for (std::size_t t = 0; t < length; ++t) {
        std::iota(ids.begin(), ids.end(), 1);
        for (std::size_t i = 0; i < static_cast<std::size_t>(p.active); ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, ids.size() - 1);
            std::swap(ids[i], ids[pick(rng)]);
        }
        ProcessorSet set(ids.begin(), ids.begin() + p.active);
        std::sort(set.begin(), set.end());
        s.sets.push_back(std::move(set));
    }
    return s;
}

/// A random member of P: a random length-N schedule cut just before the first
/// time some adversary can kill it.
inline Schedule random_p_member(const GameParams& p, std::uint64_t seed)
{
    Schedule s = random_schedule(p, static_cast<std::size_t>(p.pool), seed);
    if (const auto t_star = first_killable_time(s)) {
        s.sets.resize(*t_star - 1);
    }
    return s;
}

} // namespace ftsched

#endif
