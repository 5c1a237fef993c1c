#ifndef KOSZUL_ERRORS_HPP
#define KOSZUL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace koszul {

// Raised when a query point is outside the semigroup a computation requires.
struct NotInSemigroupError : std::runtime_error {
    explicit NotInSemigroupError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an enumeration would exceed a configured safety cap
// (KOSZUL_LAB_MAX_FACES or a max-links bound).
struct LimitExceededError : std::runtime_error {
    explicit LimitExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal consistency check fails (boundary-of-boundary,
// Euler bookkeeping, oracle cross-checks). Indicates a bug, not bad input.
struct SelfCheckError : std::logic_error {
    explicit SelfCheckError(const std::string& what) : std::logic_error(what) {}
};

} // namespace koszul

#endif
