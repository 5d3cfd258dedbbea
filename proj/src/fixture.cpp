#include "streaks/fixture.hpp"

#include <array>
#include <sstream>

namespace streaks {

namespace {

constexpr std::string_view kTable1Csv = R"(# SuperEnalotto draws, October-December 2009
date,n1,n2,n3,n4,n5,n6
2009-12-31,40,41,45,51,52,79
2009-12-29,11,16,21,62,70,84
2009-12-28,34,36,61,62,78,88
2009-12-24,5,25,37,52,62,79
2009-12-22,6,13,17,52,64,82
2009-12-19,9,15,17,34,73,83
2009-12-17,1,23,32,53,66,83
2009-12-15,1,4,48,53,61,85
2009-12-12,10,16,40,55,66,77
2009-12-10,33,36,39,50,65,70
2009-12-09,9,30,50,57,62,70
2009-12-05,20,63,66,74,75,77
2009-12-03,19,30,34,49,54,74
2009-12-01,21,25,36,51,82,90
2009-11-28,3,42,52,67,78,86
2009-11-26,26,31,32,50,61,77
2009-11-24,19,47,69,71,86,87
2009-11-21,36,37,50,57,73,83
2009-11-19,1,35,42,55,57,62
2009-11-17,16,25,28,30,39,51
2009-11-14,15,27,31,40,63,82
2009-11-12,37,43,49,66,73,88
2009-11-10,24,32,56,59,76,81
2009-11-07,9,11,70,74,75,84
2009-11-05,12,20,28,57,74,85
2009-11-03,22,35,44,66,71,88
2009-10-31,13,16,41,49,58,76
2009-10-29,29,37,42,52,54,59
2009-10-27,38,43,44,45,63,77
2009-10-24,6,26,37,38,55,73
2009-10-22,29,33,34,64,65,87
2009-10-20,41,47,49,55,77,90
2009-10-17,8,24,45,47,72,84
2009-10-15,3,29,51,55,73,81
2009-10-13,5,11,40,43,56,82
2009-10-10,9,33,34,52,82,83
2009-10-08,1,12,17,65,70,90
2009-10-06,23,24,49,69,70,72
2009-10-03,28,38,59,60,71,83
2009-10-01,4,19,34,52,68,77
)";

const std::array<Fixture, 1>& fixture_table() {
    static const std::array<Fixture, 1> table{Fixture{
        "table1",
        "SuperEnalotto, October-December 2009 (40 draws)",
        LotteryConfig(90, 6),
        kTable1Csv,
        Date(1997, 12, 3),
        Date(1997, 12, 7),
    }};
    return table;
}

}  // namespace

std::span<const Fixture> fixtures() { return fixture_table(); }

const Fixture* find_fixture(std::string_view name) {
    for (const Fixture& fixture : fixture_table())
        if (fixture.name == name) return &fixture;
    return nullptr;
}

DrawHistory load_fixture(const Fixture& fixture) {
    std::istringstream stream{std::string(fixture.csv)};
    return parse_history(stream, fixture.config);
}

}  // namespace streaks
