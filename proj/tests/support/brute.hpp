#pragma once

// Brute-force reference implementations for the test suites. These are
// deliberately written as plain recursions and DP tables, sharing no
// code path with the library routines they check.

#include <cstdint>
#include <vector>

namespace brute {

// Number of solutions of v_1 + ... + v_{f+p} = total with the first f
// variables >= 0 and the remaining p variables >= 1, built one
// variable at a time.
inline std::uint64_t compositions(int total, int free_vars, int positive_vars) {
    if (total < 0) return 0;
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(total) + 1, 0);
    ways[0] = 1;
    auto add_variable = [&](int min_value) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (std::size_t t = 0; t < ways.size(); ++t) {
            if (ways[t] == 0) continue;
            for (std::size_t v = static_cast<std::size_t>(min_value); t + v < ways.size(); ++v)
                next[t + v] += ways[t];
        }
        ways = std::move(next);
    };
    for (int i = 0; i < free_vars; ++i) add_variable(0);
    for (int i = 0; i < positive_vars; ++i) add_variable(1);
    return ways[static_cast<std::size_t>(total)];
}

// Tally of every draw-size subset of {1..pool} by adjacent-pair count,
// by direct recursive generation. counts[k] = subsets with exactly k
// pairs of consecutive values.
inline std::vector<std::uint64_t> enumerate_categories(int pool, int draw) {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(draw), 0);
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(draw));
    auto recurse = [&](auto&& self, int next_value) -> void {
        if (static_cast<int>(chosen.size()) == draw) {
            int pairs = 0;
            for (std::size_t i = 1; i < chosen.size(); ++i)
                if (chosen[i] == chosen[i - 1] + 1) ++pairs;
            ++counts[static_cast<std::size_t>(pairs)];
            return;
        }
        const int needed = draw - static_cast<int>(chosen.size());
        for (int v = next_value; v + needed - 1 <= pool; ++v) {
            chosen.push_back(v);
            self(self, v + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 1);
    return counts;
}

}  // namespace brute
