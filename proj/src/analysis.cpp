#include "streaks/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

namespace streaks {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::optional<int> parse_int(std::string_view token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || token.empty()) return std::nullopt;
    return value;
}

std::optional<Date> parse_date(std::string_view token) {
    // Strict YYYY-MM-DD.
    if (token.size() != 10 || token[4] != '-' || token[7] != '-') return std::nullopt;
    const auto year = parse_int(token.substr(0, 4));
    const auto month = parse_int(token.substr(5, 2));
    const auto day = parse_int(token.substr(8, 2));
    if (!year || !month || !day) return std::nullopt;
    try {
        return Date(*year, *month, *day);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string join_diagnostics(const std::vector<ParseDiagnostic>& diagnostics) {
    std::ostringstream out;
    out << diagnostics.size() << (diagnostics.size() == 1 ? " parse error" : " parse errors");
    for (const ParseDiagnostic& d : diagnostics)
        out << "\n  line " << d.line << ": " << d.message;
    return out.str();
}

ExpectedBand band_from(const OccurrenceModel& model) {
    ExpectedBand band;
    band.probability = model.success_probability;
    band.mean = model.mean;
    band.std_dev = model.std_dev;
    band.mean_rounded = std::llrint(model.mean);
    band.std_dev_rounded = std::llrint(model.std_dev);
    return band;
}

std::optional<double> z_score(std::uint64_t observed, const ExpectedBand& band) {
    if (band.std_dev <= 0.0) return std::nullopt;
    return (static_cast<double>(observed) - band.mean) / band.std_dev;
}

}  // namespace

Date::Date(int y, int m, int d) : year(y), month(m), day(d) {
    const std::chrono::year_month_day ymd{std::chrono::year(y), std::chrono::month(static_cast<unsigned>(m)),
                                          std::chrono::day(static_cast<unsigned>(d))};
    if (m < 1 || m > 12 || d < 1 || !ymd.ok())
        throw std::invalid_argument("invalid calendar date");
}

std::string Date::iso() const {
    char buffer[16];
    std::snprintf(buffer, sizeof buffer, "%04d-%02d-%02d", year, month, day);
    return buffer;
}

ParseError::ParseError(std::vector<ParseDiagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

DrawHistory parse_history(std::istream& input, const LotteryConfig& config) {
    DrawHistory history{config, {}};
    std::vector<ParseDiagnostic> diagnostics;

    std::string line;
    std::size_t line_number = 0;
    bool seen_content = false;
    while (std::getline(input, line)) {
        ++line_number;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        const auto fields = split_fields(stripped);
        if (!seen_content) {
            seen_content = true;
            // Optional header: second field is not a number.
            if (fields.size() >= 2 && !parse_int(fields[1]).has_value()) continue;
        }

        if (static_cast<int>(fields.size()) != config.draw_size + 1) {
            diagnostics.push_back({line_number,
                                   "expected " + std::to_string(config.draw_size + 1) + " fields, got " +
                                       std::to_string(fields.size())});
            continue;
        }

        const auto date = parse_date(fields[0]);
        if (!date) {
            diagnostics.push_back({line_number, "malformed date '" + std::string(fields[0]) +
                                                    "' (expected YYYY-MM-DD)"});
            continue;
        }

        std::vector<int> numbers;
        numbers.reserve(static_cast<std::size_t>(config.draw_size));
        bool bad_token = false;
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const auto value = parse_int(fields[i]);
            if (!value) {
                diagnostics.push_back({line_number, "non-integer token '" + std::string(fields[i]) + "'"});
                bad_token = true;
                break;
            }
            numbers.push_back(*value);
        }
        if (bad_token) continue;

        std::sort(numbers.begin(), numbers.end());
        bool bad_draw = false;
        for (std::size_t i = 0; i < numbers.size(); ++i) {
            if (numbers[i] < 1 || numbers[i] > config.pool_size) {
                diagnostics.push_back({line_number, "number " + std::to_string(numbers[i]) +
                                                        " out of range 1.." +
                                                        std::to_string(config.pool_size)});
                bad_draw = true;
                break;
            }
            if (i > 0 && numbers[i] == numbers[i - 1]) {
                diagnostics.push_back({line_number,
                                       "duplicate number " + std::to_string(numbers[i])});
                bad_draw = true;
                break;
            }
        }
        if (bad_draw) continue;

        history.draws.push_back(Draw{*date, std::move(numbers)});
    }

    if (!diagnostics.empty()) throw ParseError(std::move(diagnostics));
    return history;
}

int adjacent_pair_count(const Draw& draw) { return count_adjacent_pairs(draw.numbers); }

std::vector<std::uint64_t> classify_history(const DrawHistory& history) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(history.config.draw_size), 0);
    for (const Draw& draw : history.draws)
        ++counts[static_cast<std::size_t>(adjacent_pair_count(draw))];
    return counts;
}

ComparisonReport compare(std::span<const std::uint64_t> observed, const LotteryConfig& config) {
    if (static_cast<int>(observed.size()) != config.draw_size)
        throw std::invalid_argument("compare: expected " + std::to_string(config.draw_size) +
                                    " category counts, got " + std::to_string(observed.size()));
    std::uint64_t trials = 0;
    for (std::uint64_t count : observed) trials += count;
    if (trials == 0) throw std::invalid_argument("compare: no draws (all observed counts are zero)");

    ComparisonReport report{config, trials, {}, {}, {}};

    for (int k = 1; k <= config.draw_size - 1; ++k) {
        CategoryComparison row;
        row.category = k;
        row.observed = observed[static_cast<std::size_t>(k)];
        row.expected = band_from(occurrence_model(config, trials, k));
        row.z_score = z_score(row.observed, row.expected);
        report.per_category.push_back(std::move(row));
    }

    report.overall.observed = trials - observed[0];
    report.overall.expected = band_from(occurrence_model(config, trials));
    report.overall.z_score = z_score(report.overall.observed, report.overall.expected);

    // Chi-square over all categories 0..draw_size-1, pooling any cell
    // whose expected count falls below 5 into its lower neighbor (the
    // lowest cell pools upward instead).
    auto& chi = report.chi_square;
    for (int k = 0; k <= config.draw_size - 1; ++k) {
        ChiSquareGroup group;
        group.lo = group.hi = k;
        group.observed = observed[static_cast<std::size_t>(k)];
        group.expected = occurrence_model(config, trials, k).mean;
        chi.groups.push_back(group);
    }
    bool pooled = false;
    while (chi.groups.size() > 1) {
        int merge_at = -1;
        for (int i = static_cast<int>(chi.groups.size()) - 1; i >= 0; --i) {
            if (chi.groups[static_cast<std::size_t>(i)].expected < 5.0) {
                merge_at = i;
                break;
            }
        }
        if (merge_at < 0) break;
        const std::size_t into = merge_at > 0 ? static_cast<std::size_t>(merge_at - 1)
                                              : static_cast<std::size_t>(0);
        const std::size_t from = merge_at > 0 ? static_cast<std::size_t>(merge_at)
                                              : static_cast<std::size_t>(1);
        chi.groups[into].hi = chi.groups[from].hi;
        chi.groups[into].observed += chi.groups[from].observed;
        chi.groups[into].expected += chi.groups[from].expected;
        chi.groups.erase(chi.groups.begin() + static_cast<std::ptrdiff_t>(from));
        pooled = true;
    }

    chi.statistic = 0.0;
    for (const ChiSquareGroup& group : chi.groups) {
        if (group.expected > 0.0) {
            const double diff = static_cast<double>(group.observed) - group.expected;
            chi.statistic += diff * diff / group.expected;
        } else if (group.observed > 0) {
            chi.statistic = std::numeric_limits<double>::infinity();
        }
    }
    chi.degrees_of_freedom = static_cast<int>(chi.groups.size()) - 1;
    if (pooled) {
        std::ostringstream note;
        note << "pooled categories (expected < 5):";
        for (const ChiSquareGroup& group : chi.groups)
            if (group.hi > group.lo) note << ' ' << group.lo << '-' << group.hi;
        chi.pooling_note = note.str();
    }

    return report;
}

}  // namespace streaks
