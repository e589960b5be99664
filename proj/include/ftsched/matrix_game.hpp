#ifndef FTSCHED_MATRIX_GAME_HPP
#define FTSCHED_MATRIX_GAME_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace ftsched {

using Rational = boost::multiprecision::mpq_rational;

/// Optimal mixed strategies of a zero-sum matrix game. The row player
/// maximizes the payoff, the column player minimizes it.
struct MatrixGameSolution {
    std::vector<Rational> row_strategy;
    std::vector<Rational> column_strategy;
    Rational value;
};

/// Solves the game exactly with a rational simplex on
///   max sum(y)  s.t.  A' y <= 1, y >= 0,
/// where A' is the payoff matrix shifted to be positive. The column strategy
/// is y / sum(y) and the row strategy comes from the slack duals. Bland's rule
/// keeps the pivoting finite and the result deterministic.
inline MatrixGameSolution solve_zero_sum(const std::vector<std::vector<Rational>>& payoff)
{
    const std::size_t rows = payoff.size();
    detail::require(rows > 0 && !payoff.front().empty(), "empty payoff matrix");
    const std::size_t cols = payoff.front().size();
    for (const auto& r : payoff) {
        detail::require(r.size() == cols, "ragged payoff matrix");
    }

    Rational lowest = payoff[0][0];
    for (const auto& r : payoff) {
        for (const auto& v : r) {
            lowest = std::min(lowest, v);
        }
    }
    const Rational shift = lowest > 0 ? Rational(0) : Rational(1) - lowest;

    const std::size_t width = cols + rows;
    std::vector<std::vector<Rational>> tableau(rows, std::vector<Rational>(width));
    std::vector<Rational> rhs(rows, Rational(1));
    std::vector<std::size_t> basis(rows);
    std::vector<Rational> reduced(width);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            tableau[i][j] = payoff[i][j] + shift;
        }
        tableau[i][cols + i] = 1;
        basis[i] = cols + i;
    }
    for (std::size_t j = 0; j < cols; ++j) {
        reduced[j] = 1;
    }

    while (true) {
        std::size_t entering = width;
        for (std::size_t j = 0; j < width; ++j) {
            if (reduced[j] > 0) {
                entering = j;
                break;
            }
        }
        if (entering == width) {
            break;
        }

        std::size_t leaving = rows;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tableau[i][entering] <= 0) {
                continue;
            }
            Rational ratio = rhs[i] / tableau[i][entering];
            if (leaving == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        // A' > 0, so every column has a positive entry and the LP is bounded.
        detail::require(leaving != rows, "unbounded matrix game LP");

        const Rational pivot = tableau[leaving][entering];
        std::vector<std::size_t> support;
        for (std::size_t j = 0; j < width; ++j) {
            if (tableau[leaving][j] != 0) {
                tableau[leaving][j] /= pivot;
                support.push_back(j);
            }
        }
        rhs[leaving] /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leaving || tableau[i][entering] == 0) {
                continue;
            }
            const Rational factor = tableau[i][entering];
            for (std::size_t j : support) {
                tableau[i][j] -= factor * tableau[leaving][j];
            }
            rhs[i] -= factor * rhs[leaving];
        }
        const Rational factor = reduced[entering];
        for (std::size_t j : support) {
            reduced[j] -= factor * tableau[leaving][j];
        }
        basis[leaving] = entering;
    }

    MatrixGameSolution sol;
    sol.column_strategy.assign(cols, Rational(0));
    Rational total = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < cols) {
            sol.column_strategy[basis[i]] = rhs[i];
            total += rhs[i];
        }
    }
    for (auto& y : sol.column_strategy) {
        y /= total;
    }
    sol.row_strategy.resize(rows);
    Rational dual_total = 0;
    for (std::size_t i = 0; i < rows; ++i) {
        sol.row_strategy[i] = -reduced[cols + i];
        dual_total += sol.row_strategy[i];
    }
    for (auto& x : sol.row_strategy) {
        x /= dual_total;
    }
    sol.value = Rational(1) / total - shift;
    return sol;
}

} // namespace ftsched

#endif
