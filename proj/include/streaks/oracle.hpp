#pragma once

/**
 * @file oracle.hpp
 * @brief Independent verification engines for the analytic model.
 *
 * enumerate_exact walks every k-subset of {1..N} in lexicographic order
 * and tallies draws by adjacent-pair count. The parallel kernel splits
 * the lexicographic range into chunks, unranks each chunk's first
 * combination, and walks chunks independently; per-chunk tallies are
 * merged in chunk order, so the result is identical to the serial
 * reference kernel no matter how many threads run.
 *
 * monte_carlo is sequential by contract: one mt19937_64 stream drives a
 * partial Fisher-Yates selection, so a (config, trials, seed) triple
 * always reproduces the same tallies. Bounded values are drawn by
 * rejection sampling rather than std::uniform_int_distribution, whose
 * output is not pinned down by the standard.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "streaks/model.hpp"

namespace streaks {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Exhaustive tally over every draw, OpenMP-parallel. Refuses
/// configurations with more than `limit` subsets, reporting the exact
/// subset count. Deterministic: equal to enumerate_exact_serial.
StreakCounts enumerate_exact(const LotteryConfig& config,
                             std::uint64_t limit = kDefaultEnumerationLimit);

/// Single-threaded reference kernel (successor-rule walk from {1..n}).
StreakCounts enumerate_exact_serial(const LotteryConfig& config,
                                    std::uint64_t limit = kDefaultEnumerationLimit);

/// The rank-th k-subset of {1..pool} in lexicographic order, rank in
/// [0, C(pool, draw)).
std::vector<int> unrank_combination(int pool, int draw, std::uint64_t rank);

/// Advances a strictly increasing combination over {1..pool} to its
/// lexicographic successor; false once the last combination is reached.
bool next_combination(std::vector<int>& combination, int pool);

/// Reproducible uniform draw sampler: partial Fisher-Yates selection
/// over a persistent pool permutation, driven by one seeded mt19937_64.
class DrawSampler {
public:
    DrawSampler(const LotteryConfig& config, std::uint64_t seed);

    /// Next draw, sorted ascending. The reference stays valid until the
    /// following call.
    const std::vector<int>& next();

private:
    LotteryConfig config_;
    std::mt19937_64 rng_;
    std::vector<int> pool_;
    std::vector<int> draw_;
};

struct MonteCarloResult {
    LotteryConfig config;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> category_counts;  // index = adjacent pairs, 0..draw_size-1
    std::uint64_t with_consecutive = 0;

    double frequency(int category) const;
    double overall_frequency() const;
    /// Binomial standard error sqrt(f(1-f)/trials) of the estimate.
    double std_error(int category) const;
    double overall_std_error() const;
};

/// `trials` uniform draws from a seeded sampler, tallied per category.
/// Bit-identical for identical (config, trials, seed).
MonteCarloResult monte_carlo(const LotteryConfig& config, std::uint64_t trials,
                             std::uint64_t seed);

/// One field-level disagreement between two tallies of the same
/// configuration. category -1 = total, -2 = with_consecutive.
struct CountMismatch {
    int pool = 0;
    int draw = 0;
    int category = 0;
    Natural expected;
    Natural actual;
};

/// Field-for-field comparison of an analytic tally against an
/// enumerated one; nullopt when they agree everywhere.
std::optional<CountMismatch> compare_streak_counts(const LotteryConfig& config,
                                                   const StreakCounts& analytic,
                                                   const StreakCounts& enumerated);

struct VerifyResult {
    int configurations = 0;
    std::vector<CountMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

/// Runs enumerate_exact against streak_counts for every configuration
/// with pool_size <= max_pool and 1 <= draw_size <= pool_size.
VerifyResult verify_range(int max_pool, std::uint64_t limit = kDefaultEnumerationLimit);

}  // namespace streaks
