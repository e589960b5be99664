#ifndef FTSCHED_MATCHING_HPP
#define FTSCHED_MATCHING_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ftsched {

enum class Side { Left, Right };

/// Bipartite graph with 0-based vertex indices on each side. Left indices are
/// totally ordered by value; for time graphs the left side holds the times.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    BipartiteGraph(std::size_t left_count, std::size_t right_count)
        : left_adj_(left_count), right_adj_(right_count)
    {
    }

    [[nodiscard]] std::size_t left_count() const noexcept { return left_adj_.size(); }
    [[nodiscard]] std::size_t right_count() const noexcept { return right_adj_.size(); }

    [[nodiscard]] std::size_t count(Side side) const noexcept
    {
        return side == Side::Left ? left_count() : right_count();
    }

    /// Inserts edge (left, right); a repeated edge is ignored.
    void add_edge(std::size_t left, std::size_t right)
    {
        detail::require(left < left_count() && right < right_count(), "edge endpoint out of range");
        insert_sorted(left_adj_[left], right);
        insert_sorted(right_adj_[right], left);
    }

    [[nodiscard]] bool has_edge(std::size_t left, std::size_t right) const
    {
        const auto& adj = left_adj_.at(left);
        return std::binary_search(adj.begin(), adj.end(), right);
    }

    /// Sorted neighbours of vertex v on the given side.
    [[nodiscard]] const std::vector<std::size_t>& adjacent(Side side, std::size_t v) const
    {
        return side == Side::Left ? left_adj_.at(v) : right_adj_.at(v);
    }

    [[nodiscard]] std::size_t edge_count() const noexcept
    {
        std::size_t total = 0;
        for (const auto& adj : left_adj_) {
            total += adj.size();
        }
        return total;
    }

    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t l = 0; l < left_adj_.size(); ++l) {
            for (std::size_t r : left_adj_[l]) {
                out.emplace_back(l, r);
            }
        }
        return out;
    }

    /// Same graph with the sides swapped.
    [[nodiscard]] BipartiteGraph transposed() const
    {
        BipartiteGraph t;
        t.left_adj_ = right_adj_;
        t.right_adj_ = left_adj_;
        return t;
    }

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    static void insert_sorted(std::vector<std::size_t>& adj, std::size_t v)
    {
        auto it = std::lower_bound(adj.begin(), adj.end(), v);
        if (it == adj.end() || *it != v) {
            adj.insert(it, v);
        }
    }

    std::vector<std::vector<std::size_t>> left_adj_;
    std::vector<std::vector<std::size_t>> right_adj_;
};

/// gamma(C): union of the neighbourhoods of the vertices in c, sorted.
inline std::vector<std::size_t> neighborhood(const BipartiteGraph& g, Side side, const std::vector<std::size_t>& c)
{
    const std::size_t other = side == Side::Left ? g.right_count() : g.left_count();
    std::vector<bool> hit(other, false);
    for (std::size_t v : c) {
        detail::require(v < g.count(side), "vertex index out of range");
        for (std::size_t w : g.adjacent(side, v)) {
            hit[w] = true;
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < other; ++w) {
        if (hit[w]) {
            out.push_back(w);
        }
    }
    return out;
}

inline constexpr std::size_t unmatched = std::numeric_limits<std::size_t>::max();

struct Matching {
    std::vector<std::size_t> mate_of_left;  // right partner, or `unmatched`
    std::vector<std::size_t> mate_of_right; // left partner, or `unmatched`
    std::size_t size = 0;

    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> pairs() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t l = 0; l < mate_of_left.size(); ++l) {
            if (mate_of_left[l] != unmatched) {
                out.emplace_back(l, mate_of_left[l]);
            }
        }
        return out;
    }
};

namespace detail {

class HopcroftKarp {
public:
    explicit HopcroftKarp(const BipartiteGraph& g)
        : g_(g), m_{std::vector<std::size_t>(g.left_count(), unmatched),
                    std::vector<std::size_t>(g.right_count(), unmatched), 0},
          dist_(g.left_count())
    {
    }

    Matching run()
    {
        while (bfs()) {
            for (std::size_t l = 0; l < g_.left_count(); ++l) {
                if (m_.mate_of_left[l] == unmatched && dfs(l)) {
                    ++m_.size;
                }
            }
        }
        return std::move(m_);
    }

private:
    static constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();

    // Layers free left vertices at distance 0; true if some free right vertex is reachable.
    bool bfs()
    {
        std::queue<std::size_t> queue;
        for (std::size_t l = 0; l < g_.left_count(); ++l) {
            if (m_.mate_of_left[l] == unmatched) {
                dist_[l] = 0;
                queue.push(l);
            } else {
                dist_[l] = inf;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            const std::size_t l = queue.front();
            queue.pop();
            for (std::size_t r : g_.adjacent(Side::Left, l)) {
                const std::size_t next = m_.mate_of_right[r];
                if (next == unmatched) {
                    found = true;
                } else if (dist_[next] == inf) {
                    dist_[next] = dist_[l] + 1;
                    queue.push(next);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t l)
    {
        for (std::size_t r : g_.adjacent(Side::Left, l)) {
            const std::size_t next = m_.mate_of_right[r];
            if (next == unmatched || (dist_[next] == dist_[l] + 1 && dfs(next))) {
                m_.mate_of_left[l] = r;
                m_.mate_of_right[r] = l;
                return true;
            }
        }
        dist_[l] = inf;
        return false;
    }

    const BipartiteGraph& g_;
    Matching m_;
    std::vector<std::size_t> dist_;
};

} // namespace detail

/// Maximum-cardinality matching (Hopcroft-Karp). Vertices and adjacency are
/// scanned in ascending index order, so the result is deterministic.
inline Matching max_matching(const BipartiteGraph& g)
{
    return detail::HopcroftKarp(g).run();
}

/// A subset C of side B attaining min_{C ⊆ B} |B - C| + |gamma(C)|.
struct DeficiencyWitness {
    Side side = Side::Right;
    std::vector<std::size_t> subset; // sorted indices into B
    std::size_t value = 0;
};

/// Builds the minimizing C from a maximum matching: C is the set of B vertices
/// reachable by alternating paths from the unmatched vertices of B. Every
/// reached vertex of the other side is matched, so the value equals the
/// matching size.
inline DeficiencyWitness deficiency_witness(const BipartiteGraph& g, Side b_side)
{
    const BipartiteGraph oriented = b_side == Side::Right ? g.transposed() : g;
    // In `oriented`, B is the left side.
    const Matching m = max_matching(oriented);

    std::vector<bool> reached_b(oriented.left_count(), false);
    std::vector<bool> reached_a(oriented.right_count(), false);
    std::queue<std::size_t> queue;
    for (std::size_t b = 0; b < oriented.left_count(); ++b) {
        if (m.mate_of_left[b] == unmatched) {
            reached_b[b] = true;
            queue.push(b);
        }
    }
    while (!queue.empty()) {
        const std::size_t b = queue.front();
        queue.pop();
        for (std::size_t a : oriented.adjacent(Side::Left, b)) {
            if (reached_a[a]) {
                continue;
            }
            reached_a[a] = true;
            const std::size_t partner = m.mate_of_right[a];
            if (partner != unmatched && !reached_b[partner]) {
                reached_b[partner] = true;
                queue.push(partner);
            }
        }
    }

    DeficiencyWitness w;
    w.side = b_side;
    for (std::size_t b = 0; b < reached_b.size(); ++b) {
        if (reached_b[b]) {
            w.subset.push_back(b);
        }
    }
    const std::size_t gamma = static_cast<std::size_t>(std::count(reached_a.begin(), reached_a.end(), true));
    w.value = oriented.left_count() - w.subset.size() + gamma;
    return w;
}

/// |B - C| + |gamma(C)| for an arbitrary subset C of side B.
inline std::size_t deficiency_value(const BipartiteGraph& g, Side b_side, const std::vector<std::size_t>& c)
{
    return g.count(b_side) - c.size() + neighborhood(g, b_side, c).size();
}

} // namespace ftsched

#endif
