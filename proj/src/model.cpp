#include "streaks/model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace streaks {

LotteryConfig::LotteryConfig(int pool, int draw) : pool_size(pool), draw_size(draw) {
    if (draw < 1 || draw > pool)
        throw std::invalid_argument("LotteryConfig: need 1 <= draw_size <= pool_size, got draw_size=" +
                                    std::to_string(draw) + " pool_size=" + std::to_string(pool));
}

GapDecomposition draw_to_gaps(const LotteryConfig& config, std::span<const int> numbers) {
    if (static_cast<int>(numbers.size()) != config.draw_size)
        throw std::invalid_argument("draw_to_gaps: expected " + std::to_string(config.draw_size) +
                                    " numbers, got " + std::to_string(numbers.size()));
    for (std::size_t i = 0; i < numbers.size(); ++i) {
        if (numbers[i] < 1 || numbers[i] > config.pool_size)
            throw std::invalid_argument("draw_to_gaps: number " + std::to_string(numbers[i]) +
                                        " out of range 1.." + std::to_string(config.pool_size));
        if (i > 0 && numbers[i] <= numbers[i - 1])
            throw std::invalid_argument("draw_to_gaps: numbers must be strictly increasing");
    }

    GapDecomposition out;
    out.gaps.reserve(static_cast<std::size_t>(config.draw_size) + 1);
    out.gaps.push_back(numbers.front() - 1);
    for (std::size_t i = 1; i < numbers.size(); ++i)
        out.gaps.push_back(numbers[i] - numbers[i - 1] - 1);
    out.gaps.push_back(config.pool_size - numbers.back());
    return out;
}

std::vector<int> gaps_to_draw(const LotteryConfig& config, const GapDecomposition& decomposition) {
    const auto& gaps = decomposition.gaps;
    if (static_cast<int>(gaps.size()) != config.draw_size + 1)
        throw std::invalid_argument("gaps_to_draw: expected " + std::to_string(config.draw_size + 1) +
                                    " gaps, got " + std::to_string(gaps.size()));
    long long sum = 0;
    for (int gap : gaps) {
        if (gap < 0) throw std::invalid_argument("gaps_to_draw: negative gap");
        sum += gap;
    }
    if (sum != config.pool_size - config.draw_size)
        throw std::invalid_argument("gaps_to_draw: gaps sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(config.pool_size - config.draw_size));

    std::vector<int> numbers;
    numbers.reserve(static_cast<std::size_t>(config.draw_size));
    int value = 0;
    for (int i = 0; i < config.draw_size; ++i) {
        value += gaps[static_cast<std::size_t>(i)] + 1;
        numbers.push_back(value);
    }
    return numbers;
}

Natural category_count(const LotteryConfig& config, int zero_gaps) {
    if (zero_gaps < 0 || zero_gaps > config.draw_size - 1) return 0;
    const int interior = config.draw_size - 1;
    return binomial(interior, zero_gaps) *
           composition_count(config.pool_size - config.draw_size, 2, interior - zero_gaps);
}

StreakCounts streak_counts(const LotteryConfig& config) {
    StreakCounts counts;
    counts.total = binomial(config.pool_size, config.draw_size);
    counts.by_category.reserve(static_cast<std::size_t>(config.draw_size - 1));
    counts.with_consecutive = 0;
    for (int k = 1; k <= config.draw_size - 1; ++k) {
        counts.by_category.push_back(category_count(config, k));
        counts.with_consecutive += counts.by_category.back();
    }
    return counts;
}

Rational consecutive_probability(const LotteryConfig& config) {
    const StreakCounts counts = streak_counts(config);
    return Rational(counts.with_consecutive, counts.total);
}

int certainty_threshold(int pool_size) {
    if (pool_size < 1) throw std::invalid_argument("certainty_threshold: pool_size must be >= 1");
    return pool_size % 2 == 0 ? (pool_size + 2) / 2 : (pool_size + 3) / 2;
}

OccurrenceModel occurrence_model(const LotteryConfig& config, std::uint64_t trials,
                                 std::optional<int> category) {
    const StreakCounts counts = streak_counts(config);
    Natural hits;
    if (!category.has_value()) {
        hits = counts.with_consecutive;
    } else if (*category == 0) {
        hits = counts.total - counts.with_consecutive;
    } else if (*category >= 1 && *category <= config.draw_size - 1) {
        hits = counts.category(*category);
    } else {
        throw std::invalid_argument("occurrence_model: category " + std::to_string(*category) +
                                    " outside 0.." + std::to_string(config.draw_size - 1));
    }

    OccurrenceModel model;
    model.success_probability = Rational(hits, counts.total);
    model.trials = trials;
    const Rational m = Rational(trials) * model.success_probability;
    const Rational var = m * (Rational(1) - model.success_probability);
    model.mean = m.convert_to<double>();
    model.std_dev = std::sqrt(var.convert_to<double>());
    return model;
}

double occurrence_probability(const LotteryConfig& config, std::uint64_t successes,
                              std::uint64_t trials) {
    if (successes > trials)
        throw std::invalid_argument("occurrence_probability: successes exceed trials");
    const StreakCounts counts = streak_counts(config);
    const Natural hit = counts.with_consecutive;
    const Natural miss = counts.total - counts.with_consecutive;

    using boost::multiprecision::pow;
    const Natural numerator = binomial(static_cast<std::int64_t>(trials),
                                       static_cast<std::int64_t>(successes)) *
                              pow(hit, static_cast<unsigned>(successes)) *
                              pow(miss, static_cast<unsigned>(trials - successes));
    const Natural denominator = pow(counts.total, static_cast<unsigned>(trials));
    return Rational(numerator, denominator).convert_to<double>();
}

}  // namespace streaks
