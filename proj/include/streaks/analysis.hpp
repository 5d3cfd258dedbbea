#pragma once

/**
 * @file analysis.hpp
 * @brief Draw-history ingestion and observed-vs-expected auditing.
 *
 * Input CSV, one draw per line:
 *
 *     YYYY-MM-DD,a1,a2,...,an
 *
 * An optional header line is detected by a non-numeric second field.
 * Lines starting with '#' and blank lines are ignored. Numbers may
 * appear in any order in the file; they are sorted during parsing.
 * Parsing is atomic: every malformed line is diagnosed, and any
 * diagnostic fails the whole parse.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "streaks/model.hpp"

namespace streaks {

/// Proleptic-Gregorian calendar date, validated on construction.
struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    Date() = default;
    Date(int y, int m, int d);  // rejects invalid calendar dates

    std::string iso() const;  // "YYYY-MM-DD"
    friend bool operator==(const Date&, const Date&) = default;
};

struct Draw {
    Date date;
    std::vector<int> numbers;  // sorted ascending, distinct, in pool range
};

struct DrawHistory {
    LotteryConfig config;
    std::vector<Draw> draws;
};

struct ParseDiagnostic {
    std::size_t line = 0;
    std::string message;
};

/// All diagnostics from a failed parse, in line order.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(std::vector<ParseDiagnostic> diagnostics);
    const std::vector<ParseDiagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<ParseDiagnostic> diagnostics_;
};

/// Parses and validates a CSV draw history. Throws ParseError with one
/// diagnostic per malformed line.
DrawHistory parse_history(std::istream& input, const LotteryConfig& config);

/// Number of adjacent consecutive pairs in the draw.
int adjacent_pair_count(const Draw& draw);

/// counts[k] = number of draws with exactly k adjacent pairs, for
/// k = 0..draw_size-1. Sums to the number of draws.
std::vector<std::uint64_t> classify_history(const DrawHistory& history);

/// Expected band for one observed count under the binomial model.
struct ExpectedBand {
    Rational probability;     // exact per-draw success probability
    double mean = 0.0;
    double std_dev = 0.0;
    long long mean_rounded = 0;     // round-half-even presentation
    long long std_dev_rounded = 0;
};

struct CategoryComparison {
    int category = 0;
    std::uint64_t observed = 0;
    ExpectedBand expected;
    std::optional<double> z_score;  // unset when std_dev == 0
};

struct OverallComparison {
    std::uint64_t observed = 0;  // draws with at least one pair
    ExpectedBand expected;
    std::optional<double> z_score;
};

/// One pooled chi-square cell covering categories lo..hi.
struct ChiSquareGroup {
    int lo = 0;
    int hi = 0;
    std::uint64_t observed = 0;
    double expected = 0.0;
};

struct ChiSquareSummary {
    double statistic = 0.0;
    int degrees_of_freedom = 0;
    std::vector<ChiSquareGroup> groups;
    std::string pooling_note;  // empty when no pooling was needed
};

struct ComparisonReport {
    LotteryConfig config;
    std::uint64_t trials = 0;
    std::vector<CategoryComparison> per_category;  // categories 1..draw_size-1
    OverallComparison overall;
    ChiSquareSummary chi_square;
};

/// Compares observed per-category counts (indexed 0..draw_size-1)
/// against the exact model with trials = sum of the counts. Categories
/// with expected count below 5 are pooled into a neighbor before the
/// chi-square statistic is computed. Refuses an all-zero input.
ComparisonReport compare(std::span<const std::uint64_t> observed, const LotteryConfig& config);

}  // namespace streaks
