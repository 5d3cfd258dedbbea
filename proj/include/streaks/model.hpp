#pragma once

/**
 * @file model.hpp
 * @brief Exact streak statistics for a k-of-N lottery configuration.
 *
 * A sorted draw a_1 < ... < a_n from {1..N} is equivalent to its gap
 * vector (s_1, ..., s_{n+1}):
 *
 *     s_1 = a_1 - 1,  s_{i+1} = a_{i+1} - a_i - 1,  s_{n+1} = N - a_n
 *
 * which always sums to N - n. A zero interior gap is exactly one
 * adjacent consecutive pair, so counting draws by pair count reduces
 * to counting gap-vector solutions: choose which of the n-1 interior
 * gaps are zero, then count compositions of N - n with the two end
 * gaps free and the remaining interior gaps positive.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "streaks/natural.hpp"

namespace streaks {

/// The (N, n) pair parameterizing everything: numbers are drawn from
/// {1..pool_size}, draw_size at a time, without replacement.
struct LotteryConfig {
    int pool_size;
    int draw_size;

    LotteryConfig(int pool, int draw);  // enforces 1 <= draw <= pool
};

/// Gap vector of a sorted draw; draw_size + 1 non-negative entries
/// summing to pool_size - draw_size.
struct GapDecomposition {
    std::vector<int> gaps;
};

/// Exact counts for one configuration. by_category[k-1] is the number
/// of draws with exactly k adjacent consecutive pairs (a run of length
/// r contributes r - 1 pairs); categories run 1..draw_size-1.
struct StreakCounts {
    Natural total;
    Natural with_consecutive;
    std::vector<Natural> by_category;

    int categories() const { return static_cast<int>(by_category.size()); }
    const Natural& category(int k) const { return by_category.at(static_cast<std::size_t>(k) - 1); }
};

/// Binomial occurrence model over `trials` independent drawings with an
/// exact per-draw success probability. mean and std_dev are computed
/// from the exact rational and converted to double at the end.
struct OccurrenceModel {
    Rational success_probability;
    std::uint64_t trials = 0;
    double mean = 0.0;
    double std_dev = 0.0;
};

/// Gap vector of a sorted draw. Rejects unsorted, duplicate, or
/// out-of-range input.
GapDecomposition draw_to_gaps(const LotteryConfig& config, std::span<const int> numbers);

/// Inverse bijection: rebuilds the strictly increasing draw. Rejects
/// gap vectors of the wrong length, with negative entries, or whose
/// sum is not pool_size - draw_size.
std::vector<int> gaps_to_draw(const LotteryConfig& config, const GapDecomposition& gaps);

/// Adjacent consecutive pairs in a strictly increasing sequence:
/// |{i : numbers[i+1] == numbers[i] + 1}|.
inline int count_adjacent_pairs(std::span<const int> sorted_numbers) {
    int pairs = 0;
    for (std::size_t i = 1; i < sorted_numbers.size(); ++i)
        if (sorted_numbers[i] == sorted_numbers[i - 1] + 1) ++pairs;
    return pairs;
}

/// Exact number of draws containing exactly `zero_gaps` adjacent
/// consecutive pairs:
///
///   C(draw_size - 1, zero_gaps)
///     * composition_count(pool_size - draw_size, 2, draw_size - 1 - zero_gaps)
///
/// Returns 0 outside 0 <= zero_gaps <= draw_size - 1.
Natural category_count(const LotteryConfig& config, int zero_gaps);

/// Full exact tally: total = C(pool_size, draw_size), every category,
/// and their sum.
StreakCounts streak_counts(const LotteryConfig& config);

/// Probability that a draw contains at least one consecutive pair, as
/// an exact reduced rational.
Rational consecutive_probability(const LotteryConfig& config);

/// Smallest draw size for which the consecutive probability is exactly
/// 1: (N+2)/2 for even N, (N+3)/2 for odd N (pigeonhole).
int certainty_threshold(int pool_size);

/// Occurrence model for `trials` drawings. `category` selects one exact
/// category (0..draw_size-1); nullopt selects "any consecutive pair".
OccurrenceModel occurrence_model(const LotteryConfig& config, std::uint64_t trials,
                                 std::optional<int> category = std::nullopt);

/// Binomial point probability of seeing exactly `successes` drawings
/// with consecutive pairs among `trials`. Exact rational arithmetic,
/// converted to double at the end.
double occurrence_probability(const LotteryConfig& config, std::uint64_t successes,
                              std::uint64_t trials);

}  // namespace streaks
