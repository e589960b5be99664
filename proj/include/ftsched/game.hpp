#ifndef FTSCHED_GAME_HPP
#define FTSCHED_GAME_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "survival.hpp"

namespace ftsched {

/// Processors are numbered 1..N.
using ProcessorId = int;
using ProcessorSet = std::vector<ProcessorId>;

/// Sequence of operating sets S_1..S_T, one per fault report.
struct Schedule {
    GameParams params;
    std::vector<ProcessorSet> sets;

    [[nodiscard]] std::size_t length() const noexcept { return sets.size(); }

    /// Set used at time t (1-based).
    [[nodiscard]] const ProcessorSet& at(std::size_t t) const { return sets.at(t - 1); }

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Kill sequence s_1..s_T; kills[t-1] must belong to S_t.
struct Adversary {
    std::vector<ProcessorId> kills;

    friend bool operator==(const Adversary&, const Adversary&) = default;
};

struct ScheduleViolation {
    enum class Kind { InvalidParams, Empty, TooLong, IdOutOfRange, DuplicateId, WrongCardinality };

    Kind kind;
    std::size_t time = 0; // 1-based; 0 when not tied to a set
    std::string message;
};

/// Returns the first broken schedule invariant, or nothing if the schedule is well formed.
inline std::optional<ScheduleViolation> validate_schedule(const Schedule& s)
{
    using Kind = ScheduleViolation::Kind;
    try {
        validate(s.params);
    } catch (const InvalidInput& e) {
        return ScheduleViolation{Kind::InvalidParams, 0, e.what()};
    }
    if (s.sets.empty()) {
        return ScheduleViolation{Kind::Empty, 0, "empty schedule"};
    }
    if (static_cast<std::int64_t>(s.sets.size()) > s.params.pool) {
        return ScheduleViolation{Kind::TooLong, 0, "schedule longer than N"};
    }
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        const std::size_t t = i + 1;
        const auto suffix = " at t=" + std::to_string(t);
        ProcessorSet sorted = s.sets[i];
        std::sort(sorted.begin(), sorted.end());
        for (ProcessorId id : sorted) {
            if (id < 1 || id > s.params.pool) {
                return ScheduleViolation{Kind::IdOutOfRange, t, "id out of range" + suffix};
            }
        }
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            return ScheduleViolation{Kind::DuplicateId, t, "duplicate id" + suffix};
        }
        if (static_cast<std::int64_t>(sorted.size()) != s.params.active) {
            return ScheduleViolation{Kind::WrongCardinality, t, "wrong cardinality" + suffix};
        }
    }
    return std::nullopt;
}

inline void require_valid(const Schedule& s)
{
    if (auto v = validate_schedule(s)) {
        throw InvalidInput(v->message);
    }
}

inline void require_valid(const Schedule& s, const Adversary& a)
{
    require_valid(s);
    detail::require(a.kills.size() == s.sets.size(), "adversary length differs from schedule length");
    for (std::size_t i = 0; i < a.kills.size(); ++i) {
        const auto& set = s.sets[i];
        if (std::find(set.begin(), set.end(), a.kills[i]) == set.end()) {
            throw InvalidInput("kill not in operating set at t=" + std::to_string(i + 1));
        }
    }
}

/// Largest t such that every u <= t has at most f distinct killed processors
/// (kills s_1..s_u, including s_u itself) inside S_u.
inline std::size_t survival_time(const Schedule& s, const Adversary& a)
{
    require_valid(s, a);
    std::vector<bool> dead(static_cast<std::size_t>(s.params.pool) + 1, false);
    for (std::size_t i = 0; i < s.sets.size(); ++i) {
        dead[static_cast<std::size_t>(a.kills[i])] = true;
        const auto faulty = std::count_if(s.sets[i].begin(), s.sets[i].end(),
                                          [&](ProcessorId p) { return dead[static_cast<std::size_t>(p)]; });
        if (faulty > s.params.tolerance) {
            return i;
        }
    }
    return s.sets.size();
}

/// Number of leading periods of trivial_schedule that carry the guarantee: h_{n,f}(N).
inline std::size_t trivial_meaningful_length(const GameParams& p)
{
    return static_cast<std::size_t>(optimum_survival_time(p));
}

/// Batch schedule achieving h_{n,f}(N).
///
/// Full batches {(i-1)n+1..in} are each used f times. The p = N mod n leftover
/// processors, topped up with the n - p lowest ids of the last full batch, are
/// then used (f + p - n)^+ times. The result is padded to length N by repeating
/// the final set.
inline Schedule trivial_schedule(const GameParams& p)
{
    validate(p);
    const auto n = static_cast<int>(p.active);
    const auto f = static_cast<int>(p.tolerance);
    const auto total = static_cast<int>(p.pool);
    const int batches = total / n;
    const int leftover = total - batches * n;

    Schedule s{p, {}};
    s.sets.reserve(static_cast<std::size_t>(total));
    for (int b = 0; b < batches; ++b) {
        ProcessorSet batch(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
            batch[static_cast<std::size_t>(j)] = b * n + j + 1;
        }
        for (int r = 0; r < f; ++r) {
            s.sets.push_back(batch);
        }
    }

    const int last_uses = std::max(f + leftover - n, 0);
    if (last_uses > 0) {
        ProcessorSet last;
        const int last_batch_start = (batches - 1) * n + 1;
        for (int j = 0; j < n - leftover; ++j) {
            last.push_back(last_batch_start + j);
        }
        for (int id = batches * n + 1; id <= total; ++id) {
            last.push_back(id);
        }
        std::sort(last.begin(), last.end());
        for (int r = 0; r < last_uses; ++r) {
            s.sets.push_back(last);
        }
    }

    const ProcessorSet pad = s.sets.back();
    s.sets.resize(static_cast<std::size_t>(total), pad);
    return s;
}

} // namespace ftsched

#endif
