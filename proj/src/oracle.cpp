#include "streaks/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace streaks {

namespace {

// Tallies one combination into per-category counters.
inline void tally(const std::vector<int>& combination, std::vector<std::uint64_t>& counts) {
    int pairs = 0;
    for (std::size_t i = 1; i < combination.size(); ++i)
        if (combination[i] == combination[i - 1] + 1) ++pairs;
    ++counts[static_cast<std::size_t>(pairs)];
}

std::uint64_t checked_total(const LotteryConfig& config, std::uint64_t limit) {
    const Natural total = binomial(config.pool_size, config.draw_size);
    if (total > limit)
        throw std::invalid_argument("enumerate_exact: configuration has " + total.str() +
                                    " subsets, exceeding limit " + std::to_string(limit));
    return total.convert_to<std::uint64_t>();
}

StreakCounts to_streak_counts(const LotteryConfig& config, std::uint64_t total,
                              const std::vector<std::uint64_t>& counts) {
    StreakCounts result;
    result.total = total;
    result.with_consecutive = 0;
    result.by_category.reserve(static_cast<std::size_t>(config.draw_size - 1));
    for (int k = 1; k <= config.draw_size - 1; ++k) {
        result.by_category.push_back(counts[static_cast<std::size_t>(k)]);
        result.with_consecutive += counts[static_cast<std::size_t>(k)];
    }
    return result;
}

// Walks `steps` combinations starting from `combination` inclusive.
void walk_chunk(std::vector<int> combination, std::uint64_t steps, int pool,
                std::vector<std::uint64_t>& counts) {
    for (std::uint64_t i = 0; i < steps; ++i) {
        tally(combination, counts);
        if (i + 1 < steps) next_combination(combination, pool);
    }
}

// Rejection-sampled uniform value in [0, bound); unbiased and fully
// determined by the generator stream.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t accept_below = (UINT64_MAX / bound) * bound;
    std::uint64_t x = rng();
    while (x >= accept_below) x = rng();
    return x % bound;
}

}  // namespace

bool next_combination(std::vector<int>& combination, int pool) {
    const int n = static_cast<int>(combination.size());
    int i = n - 1;
    while (i >= 0 && combination[static_cast<std::size_t>(i)] == pool - (n - 1 - i)) --i;
    if (i < 0) return false;
    ++combination[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
        combination[static_cast<std::size_t>(j)] = combination[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

std::vector<int> unrank_combination(int pool, int draw, std::uint64_t rank) {
    std::vector<int> combination(static_cast<std::size_t>(draw));
    Natural remaining = rank;
    int value = 1;
    for (int i = 0; i < draw; ++i) {
        while (true) {
            const Natural below = binomial(pool - value, draw - 1 - i);
            if (remaining < below) break;
            remaining -= below;
            ++value;
        }
        combination[static_cast<std::size_t>(i)] = value;
        ++value;
    }
    return combination;
}

StreakCounts enumerate_exact_serial(const LotteryConfig& config, std::uint64_t limit) {
    const std::uint64_t total = checked_total(config, limit);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(config.draw_size), 0);

    std::vector<int> combination(static_cast<std::size_t>(config.draw_size));
    std::iota(combination.begin(), combination.end(), 1);
    walk_chunk(std::move(combination), total, config.pool_size, counts);
    return to_streak_counts(config, total, counts);
}

StreakCounts enumerate_exact(const LotteryConfig& config, std::uint64_t limit) {
    const std::uint64_t total = checked_total(config, limit);

    int workers = 1;
#ifdef _OPENMP
    workers = omp_get_max_threads();
#endif
    // A few chunks per worker evens out load from the varying cost of
    // the successor rule; tiny ranges stay single-chunk.
    const std::uint64_t target_chunks = static_cast<std::uint64_t>(workers) * 4;
    const std::uint64_t chunk_count = std::max<std::uint64_t>(1, std::min(total, target_chunks));
    const std::uint64_t chunk_size = total / chunk_count;
    const std::uint64_t oversized = total % chunk_count;  // first `oversized` chunks get +1

    std::vector<std::vector<std::uint64_t>> chunk_counts(
        chunk_count, std::vector<std::uint64_t>(static_cast<std::size_t>(config.draw_size), 0));

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunk_count); ++c) {
        const std::uint64_t uc = static_cast<std::uint64_t>(c);
        const std::uint64_t start = uc * chunk_size + std::min(uc, oversized);
        const std::uint64_t steps = chunk_size + (uc < oversized ? 1 : 0);
        if (steps == 0) continue;
        walk_chunk(unrank_combination(config.pool_size, config.draw_size, start), steps,
                   config.pool_size, chunk_counts[uc]);
    }

    // Ordered merge; uint64 addition commutes, so this matches the
    // serial kernel exactly regardless of thread count.
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(config.draw_size), 0);
    for (const auto& local : chunk_counts)
        for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += local[k];
    return to_streak_counts(config, total, counts);
}

DrawSampler::DrawSampler(const LotteryConfig& config, std::uint64_t seed)
    : config_(config), rng_(seed), pool_(static_cast<std::size_t>(config.pool_size)),
      draw_(static_cast<std::size_t>(config.draw_size)) {
    std::iota(pool_.begin(), pool_.end(), 1);
}

const std::vector<int>& DrawSampler::next() {
    // Partial Fisher-Yates: after i swaps the prefix holds i uniform
    // distinct picks. The pool is left permuted between calls; the
    // selection stays uniform from any starting permutation.
    const int n = config_.draw_size;
    const int N = config_.pool_size;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t j =
            static_cast<std::uint64_t>(i) + bounded(rng_, static_cast<std::uint64_t>(N - i));
        std::swap(pool_[static_cast<std::size_t>(i)], pool_[j]);
        draw_[static_cast<std::size_t>(i)] = pool_[static_cast<std::size_t>(i)];
    }
    std::sort(draw_.begin(), draw_.end());
    return draw_;
}

double MonteCarloResult::frequency(int category) const {
    if (trials == 0) return 0.0;
    return static_cast<double>(category_counts.at(static_cast<std::size_t>(category))) /
           static_cast<double>(trials);
}

double MonteCarloResult::overall_frequency() const {
    if (trials == 0) return 0.0;
    return static_cast<double>(with_consecutive) / static_cast<double>(trials);
}

double MonteCarloResult::std_error(int category) const {
    if (trials == 0) return 0.0;
    const double f = frequency(category);
    return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

double MonteCarloResult::overall_std_error() const {
    if (trials == 0) return 0.0;
    const double f = overall_frequency();
    return std::sqrt(f * (1.0 - f) / static_cast<double>(trials));
}

MonteCarloResult monte_carlo(const LotteryConfig& config, std::uint64_t trials,
                             std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
    MonteCarloResult result{config, trials, seed,
                            std::vector<std::uint64_t>(static_cast<std::size_t>(config.draw_size), 0),
                            0};
    DrawSampler sampler(config, seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const std::vector<int>& draw = sampler.next();
        const int pairs = count_adjacent_pairs(draw);
        ++result.category_counts[static_cast<std::size_t>(pairs)];
    }
    for (std::size_t k = 1; k < result.category_counts.size(); ++k)
        result.with_consecutive += result.category_counts[k];
    return result;
}

std::optional<CountMismatch> compare_streak_counts(const LotteryConfig& config,
                                                   const StreakCounts& analytic,
                                                   const StreakCounts& enumerated) {
    auto mismatch = [&](int category, const Natural& expected, const Natural& actual) {
        return CountMismatch{config.pool_size, config.draw_size, category, expected, actual};
    };
    if (analytic.total != enumerated.total)
        return mismatch(-1, analytic.total, enumerated.total);
    if (analytic.with_consecutive != enumerated.with_consecutive)
        return mismatch(-2, analytic.with_consecutive, enumerated.with_consecutive);
    for (int k = 1; k <= config.draw_size - 1; ++k)
        if (analytic.category(k) != enumerated.category(k))
            return mismatch(k, analytic.category(k), enumerated.category(k));
    return std::nullopt;
}

VerifyResult verify_range(int max_pool, std::uint64_t limit) {
    if (max_pool < 1) throw std::invalid_argument("verify_range: max_pool must be >= 1");
    VerifyResult result;
    for (int pool = 1; pool <= max_pool; ++pool) {
        for (int draw = 1; draw <= pool; ++draw) {
            const LotteryConfig config(pool, draw);
            ++result.configurations;
            const auto mismatch =
                compare_streak_counts(config, streak_counts(config), enumerate_exact(config, limit));
            if (mismatch) result.mismatches.push_back(*mismatch);
        }
    }
    return result;
}

}  // namespace streaks
