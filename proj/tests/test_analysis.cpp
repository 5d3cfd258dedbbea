#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "streaks/analysis.hpp"
#include "streaks/fixture.hpp"

using streaks::LotteryConfig;
using streaks::Rational;

namespace {

streaks::DrawHistory parse(const std::string& text, const LotteryConfig& config) {
    std::istringstream stream(text);
    return streaks::parse_history(stream, config);
}

std::vector<streaks::ParseDiagnostic> diagnostics_of(const std::string& text,
                                                     const LotteryConfig& config) {
    try {
        parse(text, config);
    } catch (const streaks::ParseError& error) {
        return error.diagnostics();
    }
    return {};
}

}  // namespace

TEST_CASE("Date validation and rendering") {
    CHECK(streaks::Date(2009, 12, 31).iso() == "2009-12-31");
    CHECK(streaks::Date(2008, 2, 29).iso() == "2008-02-29");
    CHECK_THROWS_AS(streaks::Date(2009, 2, 29), std::invalid_argument);
    CHECK_THROWS_AS(streaks::Date(2009, 13, 1), std::invalid_argument);
    CHECK_THROWS_AS(streaks::Date(2009, 4, 31), std::invalid_argument);
    CHECK_THROWS_AS(streaks::Date(2009, 0, 10), std::invalid_argument);
}

TEST_CASE("parse_history reads a well-formed file") {
    const std::string text =
        "# comment line\n"
        "date,n1,n2,n3,n4,n5,n6\n"
        "\n"
        "2009-12-31,40,41,45,51,52,79\n"
        "2009-12-24,5,25,37,52,62,79\n";
    const streaks::DrawHistory history = parse(text, LotteryConfig(90, 6));
    REQUIRE(history.draws.size() == 2);
    CHECK(history.draws[0].date == streaks::Date(2009, 12, 31));
    CHECK(history.draws[0].numbers == std::vector<int>{40, 41, 45, 51, 52, 79});
    CHECK(history.draws[1].numbers == std::vector<int>{5, 25, 37, 52, 62, 79});
}

TEST_CASE("parse_history sorts unsorted numbers") {
    const streaks::DrawHistory history = parse("2009-12-31,79,41,40,52,51,45\n", LotteryConfig(90, 6));
    REQUIRE(history.draws.size() == 1);
    CHECK(history.draws[0].numbers == std::vector<int>{40, 41, 45, 51, 52, 79});
}

TEST_CASE("parse_history accepts headerless files") {
    const streaks::DrawHistory history = parse("2009-12-31,40,41,45,51,52,79", LotteryConfig(90, 6));
    CHECK(history.draws.size() == 1);
}

TEST_CASE("parse_history per-line diagnostics") {
    const LotteryConfig config(90, 6);

    auto d = diagnostics_of("2009-12-31,40,40,45,51,52,79\n", config);
    REQUIRE(d.size() == 1);
    CHECK(d[0].line == 1);
    CHECK(d[0].message.find("duplicate") != std::string::npos);

    d = diagnostics_of("2009-12-31,40,41,45,51,52,95\n", config);
    REQUIRE(d.size() == 1);
    CHECK(d[0].message.find("out of range") != std::string::npos);

    d = diagnostics_of("2009-31-12,40,41,45,51,52,79\n", config);
    REQUIRE(d.size() == 1);
    CHECK(d[0].message.find("date") != std::string::npos);

    d = diagnostics_of("2009-12-31,40,41,45,51,52\n", config);
    REQUIRE(d.size() == 1);
    CHECK(d[0].message.find("fields") != std::string::npos);

    d = diagnostics_of("2009-12-31,40,41,xx,51,52,79\n", config);
    REQUIRE(d.size() == 1);
    CHECK(d[0].message.find("non-integer") != std::string::npos);
}

TEST_CASE("parse_history fails atomically with every diagnostic listed") {
    const std::string text =
        "date,n1,n2,n3,n4,n5,n6\n"
        "2009-12-31,40,41,45,51,52,79\n"
        "2009-02-30,1,2,3,4,5,6\n"
        "2009-12-24,5,25,37,52,62\n"
        "2009-12-22,6,13,17,52,64,99\n";
    const auto d = diagnostics_of(text, LotteryConfig(90, 6));
    REQUIRE(d.size() == 3);
    CHECK(d[0].line == 3);
    CHECK(d[1].line == 4);
    CHECK(d[2].line == 5);

    try {
        parse(text, LotteryConfig(90, 6));
        FAIL("expected ParseError");
    } catch (const streaks::ParseError& error) {
        const std::string what = error.what();
        CHECK(what.find("3 parse errors") != std::string::npos);
        CHECK(what.find("line 3") != std::string::npos);
        CHECK(what.find("line 5") != std::string::npos);
    }
}

TEST_CASE("header is only recognized on the first content line") {
    // Numeric second field on the first line means there is no header.
    const streaks::DrawHistory history =
        parse("2009-12-31,40,41,45,51,52,79\n2009-12-29,11,16,21,62,70,84\n", LotteryConfig(90, 6));
    CHECK(history.draws.size() == 2);

    // A stray non-numeric line later is an error, not a second header.
    const auto d = diagnostics_of(
        "date,n1,n2,n3,n4,n5,n6\n"
        "2009-12-31,40,41,45,51,52,79\n"
        "date,n1,n2,n3,n4,n5,n6\n",
        LotteryConfig(90, 6));
    CHECK(d.size() == 1);
}

TEST_CASE("adjacent_pair_count and classify_history") {
    streaks::Draw draw{streaks::Date(2009, 12, 31), {40, 41, 45, 51, 52, 79}};
    CHECK(streaks::adjacent_pair_count(draw) == 2);

    streaks::DrawHistory history{LotteryConfig(90, 6), {}};
    CHECK(streaks::classify_history(history) == std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0});

    history.draws.push_back(streaks::Draw{streaks::Date(2010, 1, 1), {1, 2, 3, 4, 5, 6}});
    CHECK(streaks::classify_history(history) == std::vector<std::uint64_t>{0, 0, 0, 0, 0, 1});
}

TEST_CASE("classification totals are conserved on generated histories") {
    std::mt19937 rng(8086);
    for (int round = 0; round < 20; ++round) {
        const int pool = 10 + static_cast<int>(rng() % 60);
        const int draw = 2 + static_cast<int>(rng() % 6);
        const LotteryConfig config(pool, draw);
        streaks::DrawHistory history{config, {}};
        const int n_draws = static_cast<int>(rng() % 200);
        std::uniform_int_distribution<int> value(1, pool);
        for (int i = 0; i < n_draws; ++i) {
            std::set<int> picked;
            while (static_cast<int>(picked.size()) < draw) picked.insert(value(rng));
            history.draws.push_back(
                streaks::Draw{streaks::Date(2009, 1, 1), {picked.begin(), picked.end()}});
        }
        const auto counts = streaks::classify_history(history);
        std::uint64_t total = 0;
        for (std::uint64_t c : counts) total += c;
        CHECK(total == static_cast<std::uint64_t>(n_draws));
    }
}

TEST_CASE("the embedded fixture classifies 13 of 40 draws as having pairs") {
    const streaks::Fixture* fixture = streaks::find_fixture("table1");
    REQUIRE(fixture != nullptr);
    CHECK(fixture->config.pool_size == 90);
    CHECK(fixture->config.draw_size == 6);
    CHECK(fixture->game_first_draw == streaks::Date(1997, 12, 3));
    CHECK(fixture->official_stats_since == streaks::Date(1997, 12, 7));

    const streaks::DrawHistory history = streaks::load_fixture(*fixture);
    REQUIRE(history.draws.size() == 40);
    const auto counts = streaks::classify_history(history);
    CHECK(counts == std::vector<std::uint64_t>{27, 8, 5, 0, 0, 0});

    CHECK(streaks::find_fixture("nope") == nullptr);
}

TEST_CASE("compare reproduces the 1507-draw record") {
    const std::vector<std::uint64_t> observed{1053, 396, 53, 5, 0, 0};
    const streaks::ComparisonReport report = streaks::compare(observed, LotteryConfig(90, 6));

    CHECK(report.trials == 1507);
    CHECK(report.overall.observed == 454);
    CHECK(report.overall.expected.mean == doctest::Approx(448.4129).epsilon(1e-5));
    CHECK(report.overall.expected.std_dev == doctest::Approx(17.74785).epsilon(1e-5));
    CHECK(report.overall.expected.mean_rounded == 448);
    CHECK(report.overall.expected.std_dev_rounded == 18);
    REQUIRE(report.overall.z_score.has_value());
    CHECK(*report.overall.z_score == doctest::Approx(0.31480).epsilon(1e-4));

    REQUIRE(report.per_category.size() == 5);
    const long long expected_means[] = {397, 49, 2, 0, 0};
    const long long expected_sds[] = {17, 7, 2, 0, 0};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(report.per_category[i].category == static_cast<int>(i) + 1);
        CHECK(report.per_category[i].expected.mean_rounded == expected_means[i]);
        CHECK(report.per_category[i].expected.std_dev_rounded == expected_sds[i]);
    }
    CHECK(report.per_category[0].observed == 396);
    REQUIRE(report.per_category[0].z_score.has_value());
    CHECK(*report.per_category[0].z_score == doctest::Approx(-0.05674).epsilon(1e-3));

    CHECK(report.chi_square.degrees_of_freedom == 2);
    REQUIRE(report.chi_square.groups.size() == 3);
    CHECK(report.chi_square.groups[2].lo == 2);
    CHECK(report.chi_square.groups[2].hi == 5);
    CHECK(report.chi_square.groups[2].observed == 58);
    CHECK(report.chi_square.statistic == doctest::Approx(0.86769).epsilon(1e-4));
    CHECK(report.chi_square.pooling_note.find("2-5") != std::string::npos);
}

TEST_CASE("compare yields zero z-scores when observations match exactly") {
    // For (10, 3) and 15 draws every expected count is an integer:
    // 15 * 56/120 = 7, 15 * 8/120 = 1.
    const std::vector<std::uint64_t> observed{7, 7, 1};
    const streaks::ComparisonReport report = streaks::compare(observed, LotteryConfig(10, 3));
    CHECK(report.overall.observed == 8);
    for (const auto& row : report.per_category) {
        REQUIRE(row.z_score.has_value());
        CHECK(*row.z_score == 0.0);
    }
    REQUIRE(report.overall.z_score.has_value());
    CHECK(*report.overall.z_score == 0.0);
}

TEST_CASE("compare flags undefined z-scores when sigma is zero") {
    const std::vector<std::uint64_t> observed{0, 5};
    const streaks::ComparisonReport report = streaks::compare(observed, LotteryConfig(2, 2));
    CHECK(!report.per_category[0].z_score.has_value());
    CHECK(!report.overall.z_score.has_value());
}

TEST_CASE("compare on an all-quiet history gives a negative overall z") {
    const std::vector<std::uint64_t> observed{10, 0, 0, 0, 0, 0};
    const streaks::ComparisonReport report = streaks::compare(observed, LotteryConfig(90, 6));
    REQUIRE(report.overall.z_score.has_value());
    CHECK(*report.overall.z_score == doctest::Approx(-2.05814).epsilon(1e-4));
}

TEST_CASE("compare is scale-consistent") {
    std::mt19937 rng(1234);
    for (int round = 0; round < 10; ++round) {
        const int pool = 8 + static_cast<int>(rng() % 40);
        const int draw = 2 + static_cast<int>(rng() % 5);
        const LotteryConfig config(pool, draw);
        std::vector<std::uint64_t> observed(static_cast<std::size_t>(draw));
        for (auto& c : observed) c = rng() % 300;
        if (std::accumulate(observed.begin(), observed.end(), std::uint64_t{0}) == 0) observed[0] = 1;

        std::vector<std::uint64_t> doubled(observed);
        for (auto& c : doubled) c *= 2;

        const auto base = streaks::compare(observed, config);
        const auto scaled = streaks::compare(doubled, config);
        for (std::size_t i = 0; i < base.per_category.size(); ++i) {
            CHECK(scaled.per_category[i].expected.mean ==
                  doctest::Approx(2.0 * base.per_category[i].expected.mean).epsilon(1e-9));
            CHECK(scaled.per_category[i].expected.std_dev ==
                  doctest::Approx(std::sqrt(2.0) * base.per_category[i].expected.std_dev).epsilon(1e-9));
        }
        CHECK(scaled.overall.expected.mean ==
              doctest::Approx(2.0 * base.overall.expected.mean).epsilon(1e-9));
        CHECK(scaled.overall.expected.std_dev ==
              doctest::Approx(std::sqrt(2.0) * base.overall.expected.std_dev).epsilon(1e-9));
    }
}

TEST_CASE("compare input validation") {
    CHECK_THROWS_WITH_AS(streaks::compare(std::vector<std::uint64_t>{0, 0, 0, 0, 0, 0},
                                          LotteryConfig(90, 6)),
                         doctest::Contains("no draws"), std::invalid_argument);
    CHECK_THROWS_AS(streaks::compare(std::vector<std::uint64_t>{1, 2}, LotteryConfig(90, 6)),
                    std::invalid_argument);
}

TEST_CASE("observed counts sum to the overall observation") {
    std::mt19937 rng(777);
    for (int round = 0; round < 10; ++round) {
        const LotteryConfig config(30, 5);
        std::vector<std::uint64_t> observed(5);
        for (auto& c : observed) c = rng() % 50;
        observed[0] += 1;
        const auto report = streaks::compare(observed, config);
        std::uint64_t sum = 0;
        for (const auto& row : report.per_category) sum += row.observed;
        CHECK(sum == report.overall.observed);
    }
}
