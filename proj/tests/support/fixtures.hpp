#pragma once

#include "oracle.hpp"

#include "tsallis/histogram.hpp"

#include <random>
#include <vector>

namespace fixtures {

// Random sparse histogram restricted to gray levels [0, levels).
inline oracle::Grid random_grid(std::mt19937_64& rng, int levels, double occupancy = 0.4, int max_count = 50)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> c(1, max_count);
    oracle::Grid g{levels, {}};
    while (g.cells.size() < 2) {
        g.cells.clear();
        for (int i = 0; i < levels; ++i)
            for (int j = 0; j < levels; ++j)
                if (u(rng) < occupancy)
                    g.cells.push_back({i, j, static_cast<std::uint64_t>(c(rng))});
    }
    return g;
}

inline tsallis::JointHistogram to_histogram(const oracle::Grid& g)
{
    std::vector<std::uint64_t> counts(256 * 256, 0);
    for (const auto& c : g.cells)
        counts[tsallis::JointHistogram::index(c.i, c.j)] += c.count;
    return tsallis::JointHistogram(std::move(counts));
}

inline tsallis::JointHistogram from_cells(std::initializer_list<oracle::Cell> cells)
{
    return to_histogram(oracle::Grid{256, cells});
}

} // namespace fixtures
