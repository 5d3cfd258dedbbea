#pragma once

/**
 * @file fixture.hpp
 * @brief Named draw-history fixtures embedded in the library.
 *
 * "table1" holds the 40 SuperEnalotto draws from October-December 2009
 * (90-ball pool, 6 numbers per draw), so the headline frequency checks
 * run without any input files.
 */

#include <optional>
#include <span>
#include <string_view>

#include "streaks/analysis.hpp"

namespace streaks {

struct Fixture {
    std::string_view name;
    std::string_view title;
    LotteryConfig config;
    std::string_view csv;
    // The game's first draw and the first draw covered by the official
    // aggregate statistics differ by a few days in the published record;
    // both dates are kept as-is.
    Date game_first_draw;
    Date official_stats_since;
};

std::span<const Fixture> fixtures();

/// Looks a fixture up by name ("table1"); nullptr when unknown.
const Fixture* find_fixture(std::string_view name);

/// Parses the fixture's embedded CSV.
DrawHistory load_fixture(const Fixture& fixture);

}  // namespace streaks
