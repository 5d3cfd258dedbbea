#pragma once

/**
 * @file natural.hpp
 * @brief Exact unbounded integer arithmetic for combinatorial counts.
 *
 * Every count in this library (subset totals, per-category tallies,
 * probability numerators/denominators) is a Natural: a non-negative
 * integer with no overflow ceiling. Probabilities are carried as exact
 * Rationals and only converted to floating point at the display layer.
 */

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace streaks {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// n-choose-k, exact. Returns 0 when k > n (or either argument is
/// negative). Uses the multiplicative formula with a running division;
/// every prefix product of k consecutive integers is divisible by k!,
/// so each intermediate division is exact.
inline Natural binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Natural result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

/// Number of ordered integer tuples summing to `total` where the first
/// `free_vars` entries may be zero and the remaining `positive_vars`
/// entries must be >= 1. Stars and bars after shifting each positive
/// variable down by one:
///
///   C(total - positive_vars + free_vars + positive_vars - 1,
///     free_vars + positive_vars - 1)
///
/// Returns 0 when total < positive_vars (the positives cannot fit).
inline Natural composition_count(std::int64_t total, std::int64_t free_vars,
                                 std::int64_t positive_vars) {
    if (total < 0 || free_vars < 0 || positive_vars < 0)
        throw std::invalid_argument("composition_count: negative argument");
    if (free_vars + positive_vars < 1)
        throw std::invalid_argument("composition_count: needs at least one variable");
    if (total < positive_vars) return 0;
    const std::int64_t vars = free_vars + positive_vars;
    return binomial(total - positive_vars + vars - 1, vars - 1);
}

}  // namespace streaks
