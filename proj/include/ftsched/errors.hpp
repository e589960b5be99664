#ifndef FTSCHED_ERRORS_HPP
#define FTSCHED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ftsched {

/// Raised when arguments violate a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the brute-force searches when an instance does not fit the budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw InvalidInput(message);
    }
}

} // namespace detail
} // namespace ftsched

#endif
