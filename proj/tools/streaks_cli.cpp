// streaks: exact statistics of consecutive numbers in k-of-N lottery draws.
//
// Subcommands: prob, counts, expect, analyze, verify, simulate. Every
// one honors --format json|table. Exit codes: 0 success, 1 verification
// mismatch, 2 usage or input error.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "streaks/analysis.hpp"
#include "streaks/fixture.hpp"
#include "streaks/model.hpp"
#include "streaks/oracle.hpp"
#include "streaks/render.hpp"

namespace {

using Json = nlohmann::ordered_json;
using streaks::LotteryConfig;
using streaks::Natural;
using streaks::Rational;

struct Options {
    std::string format = "table";
    int precision = 4;
    std::uint64_t limit = streaks::kDefaultEnumerationLimit;

    bool json() const { return format == "json"; }
};

std::string pad(std::string text, std::size_t width) {
    if (text.size() < width) text.append(width - text.size(), ' ');
    return text;
}

void print_rows(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += i + 1 < row.size() ? pad(row[i], widths[i] + 2) : row[i];
        }
        std::cout << line << '\n';
    }
}

std::string fraction_text(const Natural& favorable, const Natural& total, int precision) {
    const Rational value(favorable, total);
    const streaks::Decimal decimal = streaks::decimal_string(value, precision);
    return favorable.str() + "/" + total.str() + (decimal.exact ? " = " : " ≈ ") + decimal.text +
           " (" + streaks::percent_string(value) + ")";
}

Json probability_json(const Natural& favorable, const Natural& total, int precision) {
    const Rational value(favorable, total);
    const streaks::Decimal decimal = streaks::decimal_string(value, precision);
    return Json{{"numerator", favorable.str()},
                {"denominator", total.str()},
                {"decimal", decimal.text},
                {"exact", decimal.exact},
                {"percent", streaks::percent_string(value)},
                {"value", value.convert_to<double>()}};
}

std::string band_text(double mean, double std_dev) {
    return streaks::format_double(mean, 3) + " ± " + streaks::format_double(std_dev, 3);
}

std::string rounded_band_text(long long mean, long long std_dev) {
    return std::to_string(mean) + " ± " + std::to_string(std_dev);
}

long long round_nearest(double value) { return std::llrint(value); }

int cmd_prob(const Options& opt, int pool, int draw) {
    const LotteryConfig config(pool, draw);
    const streaks::StreakCounts counts = streaks::streak_counts(config);
    if (opt.json()) {
        Json out{{"pool", pool},
                 {"draw", draw},
                 {"probability", probability_json(counts.with_consecutive, counts.total, opt.precision)}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << fraction_text(counts.with_consecutive, counts.total, opt.precision) << '\n';
    }
    return 0;
}

int cmd_counts(const Options& opt, int pool, int draw) {
    const LotteryConfig config(pool, draw);
    const streaks::StreakCounts counts = streaks::streak_counts(config);
    const Natural without = counts.total - counts.with_consecutive;
    if (opt.json()) {
        Json categories = Json::array();
        for (int k = 1; k <= counts.categories(); ++k)
            categories.push_back(Json{{"category", k}, {"count", counts.category(k).str()}});
        Json out{{"pool", pool},
                 {"draw", draw},
                 {"total", counts.total.str()},
                 {"with_consecutive", counts.with_consecutive.str()},
                 {"without_consecutive", without.str()},
                 {"by_category", categories}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    std::cout << "pool " << pool << ", draw " << draw << "\n\n";
    std::vector<std::vector<std::string>> rows{{"category", "count"}};
    for (int k = 1; k <= counts.categories(); ++k)
        rows.push_back({std::to_string(k), counts.category(k).str()});
    rows.push_back({"with consecutive", counts.with_consecutive.str()});
    rows.push_back({"without", without.str()});
    rows.push_back({"total", counts.total.str()});
    print_rows(rows);
    return 0;
}

int cmd_expect(const Options& opt, int pool, int draw, std::uint64_t draws) {
    const LotteryConfig config(pool, draw);
    const streaks::OccurrenceModel overall = streaks::occurrence_model(config, draws);

    std::vector<streaks::OccurrenceModel> models;
    for (int k = 1; k <= draw - 1; ++k)
        models.push_back(streaks::occurrence_model(config, draws, k));

    if (opt.json()) {
        Json categories = Json::array();
        for (int k = 1; k <= draw - 1; ++k) {
            const auto& m = models[static_cast<std::size_t>(k - 1)];
            categories.push_back(Json{
                {"category", k},
                {"probability", probability_json(boost::multiprecision::numerator(m.success_probability),
                                                 boost::multiprecision::denominator(m.success_probability),
                                                 opt.precision)},
                {"mean", m.mean},
                {"std_dev", m.std_dev},
                {"mean_rounded", round_nearest(m.mean)},
                {"std_dev_rounded", round_nearest(m.std_dev)}});
        }
        Json out{{"pool", pool},
                 {"draw", draw},
                 {"draws", draws},
                 {"per_category", categories},
                 {"overall",
                  Json{{"probability",
                        probability_json(boost::multiprecision::numerator(overall.success_probability),
                                         boost::multiprecision::denominator(overall.success_probability),
                                         opt.precision)},
                       {"mean", overall.mean},
                       {"std_dev", overall.std_dev},
                       {"mean_rounded", round_nearest(overall.mean)},
                       {"std_dev_rounded", round_nearest(overall.std_dev)}}}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    std::cout << "pool " << pool << ", draw " << draw << ", draws " << draws << "\n\n";
    std::vector<std::vector<std::string>> rows{{"category", "expected", "rounded"}};
    for (int k = 1; k <= draw - 1; ++k) {
        const auto& m = models[static_cast<std::size_t>(k - 1)];
        rows.push_back({std::to_string(k), band_text(m.mean, m.std_dev),
                        rounded_band_text(round_nearest(m.mean), round_nearest(m.std_dev))});
    }
    rows.push_back({"overall", band_text(overall.mean, overall.std_dev),
                    rounded_band_text(round_nearest(overall.mean), round_nearest(overall.std_dev))});
    print_rows(rows);
    return 0;
}

Json report_json(const streaks::ComparisonReport& report, int precision) {
    auto band = [&](const streaks::ExpectedBand& b) {
        return Json{{"probability", probability_json(boost::multiprecision::numerator(b.probability),
                                                     boost::multiprecision::denominator(b.probability),
                                                     precision)},
                    {"mean", b.mean},
                    {"std_dev", b.std_dev},
                    {"mean_rounded", b.mean_rounded},
                    {"std_dev_rounded", b.std_dev_rounded}};
    };
    Json categories = Json::array();
    for (const auto& c : report.per_category) {
        categories.push_back(Json{{"category", c.category},
                                  {"observed", c.observed},
                                  {"expected", band(c.expected)},
                                  {"z", c.z_score ? Json(*c.z_score) : Json(nullptr)}});
    }
    Json groups = Json::array();
    for (const auto& g : report.chi_square.groups) {
        groups.push_back(Json{{"lo", g.lo}, {"hi", g.hi}, {"observed", g.observed}, {"expected", g.expected}});
    }
    const Rational frequency(report.overall.observed, report.trials);
    return Json{{"pool", report.config.pool_size},
                {"draw", report.config.draw_size},
                {"draws", report.trials},
                {"per_category", categories},
                {"overall", Json{{"observed", report.overall.observed},
                                 {"frequency", frequency.convert_to<double>()},
                                 {"percent", streaks::percent_string(frequency)},
                                 {"expected", band(report.overall.expected)},
                                 {"z", report.overall.z_score ? Json(*report.overall.z_score) : Json(nullptr)}}},
                {"chi_square", Json{{"statistic", report.chi_square.statistic},
                                    {"degrees_of_freedom", report.chi_square.degrees_of_freedom},
                                    {"groups", groups},
                                    {"pooling", report.chi_square.pooling_note}}}};
}

void print_report(const streaks::ComparisonReport& report) {
    std::cout << "pool " << report.config.pool_size << ", draw " << report.config.draw_size
              << ", draws " << report.trials << "\n\n";

    auto z_text = [](const std::optional<double>& z) {
        return z ? streaks::format_double(*z, 2) : std::string("n/a");
    };
    std::vector<std::vector<std::string>> rows{{"category", "observed", "expected", "rounded", "z"}};
    for (const auto& c : report.per_category) {
        rows.push_back({std::to_string(c.category), std::to_string(c.observed),
                        band_text(c.expected.mean, c.expected.std_dev),
                        rounded_band_text(c.expected.mean_rounded, c.expected.std_dev_rounded),
                        z_text(c.z_score)});
    }
    rows.push_back({"overall", std::to_string(report.overall.observed),
                    band_text(report.overall.expected.mean, report.overall.expected.std_dev),
                    rounded_band_text(report.overall.expected.mean_rounded,
                                      report.overall.expected.std_dev_rounded),
                    z_text(report.overall.z_score)});
    print_rows(rows);

    const Rational frequency(report.overall.observed, report.trials);
    std::cout << "\nwith consecutive strings: " << report.overall.observed << " of " << report.trials
              << " (" << streaks::percent_string(frequency) << ")\n";
    if (report.chi_square.degrees_of_freedom < 1)
        std::cout << "chi-square: n/a (too few draws, every category pooled)\n";
    else
        std::cout << "chi-square: " << streaks::format_double(report.chi_square.statistic, 3)
                  << " on " << report.chi_square.degrees_of_freedom
                  << (report.chi_square.degrees_of_freedom == 1 ? " degree" : " degrees")
                  << " of freedom\n";
    if (!report.chi_square.pooling_note.empty())
        std::cout << report.chi_square.pooling_note << '\n';
}

int cmd_analyze(const Options& opt, const std::string& input_path, const std::string& fixture_name,
                const std::vector<std::uint64_t>& observed, std::uint64_t draws, int pool, int draw) {
    std::optional<LotteryConfig> config;
    std::vector<std::uint64_t> counts;

    if (!fixture_name.empty()) {
        const streaks::Fixture* fixture = streaks::find_fixture(fixture_name);
        if (fixture == nullptr) {
            std::cerr << "error: unknown fixture \"" << fixture_name << "\"\n";
            return 2;
        }
        const streaks::DrawHistory history = streaks::load_fixture(*fixture);
        config = history.config;
        counts = streaks::classify_history(history);
    } else if (!input_path.empty()) {
        std::ifstream file(input_path);
        if (!file) {
            std::cerr << "error: cannot open " << input_path << '\n';
            return 2;
        }
        config = LotteryConfig(pool, draw);
        const streaks::DrawHistory history = streaks::parse_history(file, *config);
        counts = streaks::classify_history(history);
    } else if (!observed.empty()) {
        config = LotteryConfig(pool, draw);
        if (static_cast<int>(observed.size()) != draw - 1) {
            std::cerr << "error: --observed needs " << draw - 1 << " values (categories 1.."
                      << draw - 1 << "), got " << observed.size() << '\n';
            return 2;
        }
        const std::uint64_t with_pairs = std::accumulate(observed.begin(), observed.end(),
                                                         std::uint64_t{0});
        if (with_pairs > draws) {
            std::cerr << "error: --observed sums to " << with_pairs << ", more than --draws "
                      << draws << '\n';
            return 2;
        }
        counts.assign(static_cast<std::size_t>(draw), 0);
        counts[0] = draws - with_pairs;
        for (std::size_t k = 0; k < observed.size(); ++k) counts[k + 1] = observed[k];
    } else {
        std::cerr << "error: analyze needs an input file, --fixture, or --observed\n";
        return 2;
    }

    const streaks::ComparisonReport report = streaks::compare(counts, *config);
    if (opt.json())
        std::cout << report_json(report, opt.precision).dump(2) << '\n';
    else
        print_report(report);
    return 0;
}

int cmd_verify(const Options& opt, int max_pool) {
    const streaks::VerifyResult result = streaks::verify_range(max_pool, opt.limit);

    if (opt.json()) {
        Json mismatches = Json::array();
        for (const auto& m : result.mismatches) {
            Json entry{{"pool", m.pool}, {"draw", m.draw}};
            if (m.category == -1)
                entry["field"] = "total";
            else if (m.category == -2)
                entry["field"] = "with_consecutive";
            else {
                entry["field"] = "category";
                entry["category"] = m.category;
            }
            entry["expected"] = m.expected.str();
            entry["enumerated"] = m.actual.str();
            mismatches.push_back(entry);
        }
        Json out{{"max_pool", max_pool},
                 {"configurations", result.configurations},
                 {"ok", result.ok()},
                 {"mismatches", mismatches}};
        std::cout << out.dump(2) << '\n';
        return result.ok() ? 0 : 1;
    }

    if (result.ok()) {
        std::cout << "all " << result.configurations
                  << (result.configurations == 1 ? " configuration matches" : " configurations match")
                  << '\n';
        return 0;
    }
    for (const auto& m : result.mismatches) {
        std::cout << "mismatch at pool " << m.pool << ", draw " << m.draw << ", ";
        if (m.category == -1)
            std::cout << "total";
        else if (m.category == -2)
            std::cout << "with consecutive";
        else
            std::cout << "category " << m.category;
        std::cout << ": expected " << m.expected.str() << ", enumerated " << m.actual.str() << '\n';
    }
    std::cout << result.mismatches.size() << " mismatched of " << result.configurations
              << " configurations\n";
    return 1;
}

int cmd_simulate(const Options& opt, int pool, int draw, std::uint64_t trials, std::uint64_t seed) {
    const LotteryConfig config(pool, draw);
    const streaks::MonteCarloResult mc = streaks::monte_carlo(config, trials, seed);
    const streaks::StreakCounts exact = streaks::streak_counts(config);

    auto exact_frequency = [&](int category) {
        const Natural& count = category == 0 ? Natural(exact.total - exact.with_consecutive)
                                             : exact.category(category);
        return Rational(count, exact.total).convert_to<double>();
    };
    const double exact_overall = Rational(exact.with_consecutive, exact.total).convert_to<double>();

    auto deviation = [](double estimate, double reference, double std_error) -> std::optional<double> {
        if (std_error <= 0.0) return std::nullopt;
        return (estimate - reference) / std_error;
    };

    if (opt.json()) {
        Json categories = Json::array();
        for (int k = 0; k <= draw - 1; ++k) {
            const double se = mc.std_error(k);
            const auto dev = deviation(mc.frequency(k), exact_frequency(k), se);
            categories.push_back(Json{{"category", k},
                                      {"count", mc.category_counts[static_cast<std::size_t>(k)]},
                                      {"frequency", mc.frequency(k)},
                                      {"std_error", se},
                                      {"exact", exact_frequency(k)},
                                      {"deviation_sigma", dev ? Json(*dev) : Json(nullptr)}});
        }
        const double se = mc.overall_std_error();
        const auto dev = deviation(mc.overall_frequency(), exact_overall, se);
        Json out{{"pool", pool},
                 {"draw", draw},
                 {"trials", trials},
                 {"seed", seed},
                 {"per_category", categories},
                 {"overall", Json{{"count", mc.with_consecutive},
                                  {"frequency", mc.overall_frequency()},
                                  {"std_error", se},
                                  {"exact", exact_overall},
                                  {"deviation_sigma", dev ? Json(*dev) : Json(nullptr)}}}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }

    std::cout << "pool " << pool << ", draw " << draw << ", trials " << trials << ", seed " << seed
              << "\n\n";
    auto dev_text = [](const std::optional<double>& dev) {
        return dev ? streaks::format_double(*dev, 2) : std::string("n/a");
    };
    std::vector<std::vector<std::string>> rows{
        {"category", "count", "frequency", "std error", "exact", "deviation"}};
    for (int k = 0; k <= draw - 1; ++k) {
        const double se = mc.std_error(k);
        rows.push_back({std::to_string(k),
                        std::to_string(mc.category_counts[static_cast<std::size_t>(k)]),
                        streaks::format_double(mc.frequency(k), opt.precision),
                        streaks::format_double(se, opt.precision + 2),
                        streaks::format_double(exact_frequency(k), opt.precision),
                        dev_text(deviation(mc.frequency(k), exact_frequency(k), se))});
    }
    const double se = mc.overall_std_error();
    rows.push_back({"overall", std::to_string(mc.with_consecutive),
                    streaks::format_double(mc.overall_frequency(), opt.precision),
                    streaks::format_double(se, opt.precision + 2),
                    streaks::format_double(exact_overall, opt.precision),
                    dev_text(deviation(mc.overall_frequency(), exact_overall, se))});
    print_rows(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact statistics of consecutive numbers in k-of-N lottery draws"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "Fractional digits for probabilities")
        ->check(CLI::Range(0, 60))
        ->capture_default_str();
    app.add_option("--limit", opt.limit, "Largest subset count enumeration accepts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int pool = 90;
    int draw = 6;
    std::uint64_t draws = 0;
    std::string input_path;
    std::string fixture_name;
    std::vector<std::uint64_t> observed;
    int max_pool = 12;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 42;

    auto add_config = [&](CLI::App* sub) {
        sub->add_option("--pool", pool, "Pool size N")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--draw", draw, "Draw size n")->check(CLI::PositiveNumber)->capture_default_str();
    };

    CLI::App* sub_prob = app.add_subcommand("prob", "Probability of at least one consecutive pair");
    sub_prob->fallthrough();
    add_config(sub_prob);

    CLI::App* sub_counts = app.add_subcommand("counts", "Exact draw counts per consecutive-pair category");
    sub_counts->fallthrough();
    add_config(sub_counts);

    CLI::App* sub_expect = app.add_subcommand("expect", "Expected occurrences over a number of drawings");
    sub_expect->fallthrough();
    add_config(sub_expect);
    sub_expect->add_option("--draws", draws, "Number of drawings M")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* sub_analyze = app.add_subcommand("analyze", "Audit a draw history against the exact model");
    sub_analyze->fallthrough();
    add_config(sub_analyze);
    CLI::Option* opt_input = sub_analyze->add_option("input", input_path, "CSV draw history file");
    CLI::Option* opt_fixture =
        sub_analyze->add_option("--fixture", fixture_name, "Embedded fixture name (table1)");
    CLI::Option* opt_observed =
        sub_analyze
            ->add_option("--observed", observed,
                         "Aggregate observed counts for categories 1..draw_size-1, comma separated")
            ->delimiter(',');
    CLI::Option* opt_draws = sub_analyze->add_option("--draws", draws, "Total drawings behind --observed")
                                 ->check(CLI::PositiveNumber);
    opt_input->excludes(opt_fixture)->excludes(opt_observed);
    opt_fixture->excludes(opt_observed);
    opt_observed->needs(opt_draws);
    opt_draws->needs(opt_observed);

    CLI::App* sub_verify = app.add_subcommand("verify", "Check analytic counts against full enumeration");
    sub_verify->fallthrough();
    sub_verify->add_option("--max-pool", max_pool, "Largest pool size to sweep")
        ->check(CLI::Range(1, 20))
        ->capture_default_str();

    CLI::App* sub_simulate = app.add_subcommand("simulate", "Monte Carlo estimate from a seeded sampler");
    sub_simulate->fallthrough();
    add_config(sub_simulate);
    sub_simulate->add_option("--trials", trials, "Number of simulated drawings")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub_simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sub_prob->parsed()) return cmd_prob(opt, pool, draw);
        if (sub_counts->parsed()) return cmd_counts(opt, pool, draw);
        if (sub_expect->parsed()) return cmd_expect(opt, pool, draw, draws);
        if (sub_analyze->parsed())
            return cmd_analyze(opt, input_path, fixture_name, observed, draws, pool, draw);
        if (sub_verify->parsed()) return cmd_verify(opt, max_pool);
        if (sub_simulate->parsed()) return cmd_simulate(opt, pool, draw, trials, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
