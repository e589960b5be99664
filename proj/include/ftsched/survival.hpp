#ifndef FTSCHED_SURVIVAL_HPP
#define FTSCHED_SURVIVAL_HPP

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace ftsched {

/// The game (N, n, f): a pool of N processors, n of them in operation at a
/// time, and at most f faulty members tolerated in the operating set.
struct GameParams {
    std::int64_t pool = 0;      // N
    std::int64_t active = 0;    // n
    std::int64_t tolerance = 0; // f

    friend bool operator==(const GameParams&, const GameParams&) = default;
};

/// Throws InvalidInput unless 1 <= f < n <= N.
inline void validate(const GameParams& p)
{
    detail::require(p.tolerance >= 1, "f must be at least 1");
    detail::require(p.tolerance < p.active, "f must be smaller than n");
    detail::require(p.active <= p.pool, "n must not exceed N");
}

/// Arguments of the survival function h_{n,f}(k).
///
/// f = 0 is admitted here (the value is then 0 for every k) so the two-pool
/// bound can evaluate splits where a type tolerates no faults. The game itself
/// always requires f >= 1.
struct HArgs {
    std::int64_t active = 0;    // n
    std::int64_t tolerance = 0; // f
    std::int64_t pool = 0;      // k
};

/// h_{n,f}(k) = floor(k/n) f + (k - floor(k/n) n + f - n)^+, in exact integers.
inline std::int64_t h_eval(const HArgs& a)
{
    detail::require(a.active >= 1, "n must be positive");
    detail::require(a.tolerance >= 0, "f must be nonnegative");
    detail::require(a.tolerance < a.active, "f must be smaller than n");
    detail::require(a.pool >= 0, "k must be nonnegative");

    const std::int64_t batches = a.pool / a.active;
    const std::int64_t remainder = a.pool - batches * a.active;
    const std::int64_t tail = remainder + a.tolerance - a.active;
    return batches * a.tolerance + (tail > 0 ? tail : 0);
}

inline std::int64_t h_eval(std::int64_t n, std::int64_t f, std::int64_t k)
{
    return h_eval(HArgs{n, f, k});
}

/// Best worst-case survival time over all schedules: h_{n,f}(N).
inline std::int64_t optimum_survival_time(const GameParams& p)
{
    validate(p);
    return h_eval(p.active, p.tolerance, p.pool);
}

/// N - n + f + 1: past this time fewer than n - f processors are alive.
inline std::int64_t apriori_upper_bound(const GameParams& p)
{
    validate(p);
    return p.pool - p.active + p.tolerance + 1;
}

} // namespace ftsched

#endif
