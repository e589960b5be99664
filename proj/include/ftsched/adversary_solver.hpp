#ifndef FTSCHED_ADVERSARY_SOLVER_HPP
#define FTSCHED_ADVERSARY_SOLVER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "game.hpp"
#include "matching.hpp"
#include "survival.hpp"

namespace ftsched {

/// I_t: left vertices are the earlier times 1..t-1 (index u-1 for time u),
/// right vertices are the neighbours of time t in the host graph.
struct TimeGraph {
    std::size_t time = 0;                   // t, 1-based
    BipartiteGraph graph;
    std::vector<std::size_t> right_vertices; // host right index of each right vertex

    /// Processor ids of the right side, for graphs built from a schedule.
    [[nodiscard]] std::vector<ProcessorId> processors() const
    {
        std::vector<ProcessorId> out;
        out.reserve(right_vertices.size());
        for (std::size_t r : right_vertices) {
            out.push_back(static_cast<ProcessorId>(r) + 1);
        }
        return out;
    }
};

/// Left-ordered bipartite graph plus the (n, f) it is judged against.
struct PInstance {
    BipartiteGraph graph;
    std::int64_t active = 0;    // n
    std::int64_t tolerance = 0; // f

    [[nodiscard]] std::size_t left_size() const noexcept { return graph.left_count(); }
    [[nodiscard]] std::size_t right_size() const noexcept { return graph.right_count(); }
};

/// Times as left vertices, processors 1..N as right vertices 0..N-1.
inline PInstance instance_from_schedule(const Schedule& s)
{
    require_valid(s);
    PInstance inst{BipartiteGraph(s.length(), static_cast<std::size_t>(s.params.pool)), s.params.active,
                   s.params.tolerance};
    for (std::size_t u = 0; u < s.length(); ++u) {
        for (ProcessorId p : s.sets[u]) {
            inst.graph.add_edge(u, static_cast<std::size_t>(p - 1));
        }
    }
    return inst;
}

/// I_t of an arbitrary left-ordered graph; t is 1-based.
inline TimeGraph time_graph(const BipartiteGraph& host, std::size_t t)
{
    detail::require(t >= 1 && t <= host.left_count(), "time index out of range");
    TimeGraph tg;
    tg.time = t;
    tg.right_vertices = host.adjacent(Side::Left, t - 1);

    std::vector<std::size_t> local(host.right_count(), unmatched);
    for (std::size_t j = 0; j < tg.right_vertices.size(); ++j) {
        local[tg.right_vertices[j]] = j;
    }
    tg.graph = BipartiteGraph(t - 1, tg.right_vertices.size());
    for (std::size_t u = 0; u + 1 < t; ++u) {
        for (std::size_t r : host.adjacent(Side::Left, u)) {
            if (local[r] != unmatched) {
                tg.graph.add_edge(u, local[r]);
            }
        }
    }
    return tg;
}

/// I_t of a schedule: edge (u, p) iff p is in both S_u and S_t.
inline TimeGraph time_graph(const Schedule& s, std::size_t t)
{
    require_valid(s);
    detail::require(t >= 1 && t <= s.length(), "time index out of range");
    return time_graph(instance_from_schedule(s).graph, t);
}

/// First time t* at which some adversary kills the schedule, i.e. the first t
/// with nu(I_t) >= f. Nothing if the schedule survives every adversary.
inline std::optional<std::size_t> first_killable_time(const Schedule& s)
{
    const PInstance inst = instance_from_schedule(s);
    const auto f = static_cast<std::size_t>(s.params.tolerance);
    // nu(I_t) <= t - 1, so no t <= f can be killed.
    for (std::size_t t = f + 1; t <= s.length(); ++t) {
        if (max_matching(time_graph(inst.graph, t).graph).size >= f) {
            return t;
        }
    }
    return std::nullopt;
}

/// T(S) = min over all adversaries of survival_time(S, A).
inline std::size_t minimal_survival_time(const Schedule& s)
{
    const auto t_star = first_killable_time(s);
    return t_star ? *t_star - 1 : s.length();
}

/// An adversary attaining minimal_survival_time. At t* the f processors of
/// S_{t*} matched to earlier times are killed at those times, and one more
/// member of S_{t*} is killed at t*. Every other position kills the lowest id.
inline Adversary minimal_adversary(const Schedule& s)
{
    require_valid(s);
    Adversary a;
    a.kills.reserve(s.length());
    for (const auto& set : s.sets) {
        a.kills.push_back(*std::min_element(set.begin(), set.end()));
    }

    const auto t_star = first_killable_time(s);
    if (!t_star) {
        return a;
    }
    const TimeGraph tg = time_graph(s, *t_star);
    const auto procs = tg.processors();
    const Matching m = max_matching(tg.graph);

    std::vector<bool> used(procs.size(), false);
    std::size_t taken = 0;
    const auto f = static_cast<std::size_t>(s.params.tolerance);
    for (const auto& [u, r] : m.pairs()) {
        if (taken == f) {
            break;
        }
        a.kills[u] = procs[r];
        used[r] = true;
        ++taken;
    }
    // procs is ascending, so this picks the lowest unmatched id.
    for (std::size_t r = 0; r < procs.size(); ++r) {
        if (!used[r]) {
            a.kills[*t_star - 1] = procs[r];
            break;
        }
    }
    return a;
}

struct PMembership {
    enum class Reason { None, Degree, Matching };

    bool ok = true;
    std::size_t time = 0; // first violating left index (1-based) when !ok
    Reason reason = Reason::None;
    std::size_t matching_size = 0;
};

/// Checks that every left vertex has degree n and nu(I_t) <= f - 1 for all t.
inline PMembership membership_in_P(const PInstance& inst)
{
    detail::require(inst.active >= 1 && inst.tolerance >= 1 && inst.tolerance < inst.active,
                    "instance needs 1 <= f < n");
    for (std::size_t t = 1; t <= inst.left_size(); ++t) {
        if (static_cast<std::int64_t>(inst.graph.adjacent(Side::Left, t - 1).size()) != inst.active) {
            return {false, t, PMembership::Reason::Degree, 0};
        }
        const std::size_t nu = max_matching(time_graph(inst.graph, t).graph).size;
        if (static_cast<std::int64_t>(nu) >= inst.tolerance) {
            return {false, t, PMembership::Reason::Matching, nu};
        }
    }
    return {};
}

struct Reduction {
    PInstance reduced;
    std::vector<std::size_t> witness;      // C, as host right indices
    std::vector<std::size_t> removed_left; // gamma(C) within I_L, plus the last time
    std::vector<std::size_t> kept_left;    // host left index of each reduced left vertex
    std::vector<std::size_t> kept_right;   // host right index of each reduced right vertex
};

/// One descent step on a member of P: take a deficiency witness C of I_L with
/// B = gamma(a_L), then drop a_L, every earlier time adjacent to C, and C itself.
/// The result is again in P, has L' <= L - 1 left vertices and satisfies
/// h(R') + (L - L') <= h(R).
inline Reduction reduce_instance(const PInstance& inst)
{
    const PMembership check = membership_in_P(inst);
    if (!check.ok) {
        throw InvalidInput("instance is not in P (violation at t=" + std::to_string(check.time) + ")");
    }
    detail::require(inst.left_size() >= 1, "instance has no left vertices");

    const std::size_t last = inst.left_size();
    const TimeGraph tg = time_graph(inst.graph, last);
    const DeficiencyWitness w = deficiency_witness(tg.graph, Side::Right);
    const std::vector<std::size_t> gamma = neighborhood(tg.graph, Side::Right, w.subset);

    Reduction out;
    std::vector<bool> drop_left(inst.left_size(), false);
    std::vector<bool> drop_right(inst.right_size(), false);
    drop_left[last - 1] = true;
    for (std::size_t u : gamma) {
        drop_left[u] = true;
    }
    for (std::size_t c : w.subset) {
        out.witness.push_back(tg.right_vertices[c]);
        drop_right[tg.right_vertices[c]] = true;
    }
    std::sort(out.witness.begin(), out.witness.end());

    std::vector<std::size_t> right_index(inst.right_size(), unmatched);
    for (std::size_t r = 0; r < inst.right_size(); ++r) {
        if (!drop_right[r]) {
            right_index[r] = out.kept_right.size();
            out.kept_right.push_back(r);
        }
    }
    for (std::size_t l = 0; l < inst.left_size(); ++l) {
        (drop_left[l] ? out.removed_left : out.kept_left).push_back(l);
    }

    out.reduced = PInstance{BipartiteGraph(out.kept_left.size(), out.kept_right.size()), inst.active,
                            inst.tolerance};
    for (std::size_t i = 0; i < out.kept_left.size(); ++i) {
        for (std::size_t r : inst.graph.adjacent(Side::Left, out.kept_left[i])) {
            if (right_index[r] != unmatched) {
                out.reduced.graph.add_edge(i, right_index[r]);
            }
        }
    }
    return out;
}

} // namespace ftsched

#endif
