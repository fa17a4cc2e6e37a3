#pragma once

#include "tsallis/imgio.hpp"

#include <array>
#include <cstdint>

namespace tsallis {

// Plain gray-level histogram over every pixel (no border exclusion).
class Histogram1D {
public:
    static constexpr int kLevels = kGrayLevels;

    // Throws InvalidParams if all counts are zero.
    explicit Histogram1D(const std::array<std::uint64_t, kLevels>& counts);

    std::uint64_t count(int v) const { return counts_[v]; }
    double p(int v) const { return pmf_[v]; }
    std::uint64_t total() const { return total_; }

private:
    std::array<std::uint64_t, kLevels> counts_{};
    std::array<double, kLevels> pmf_{};
    std::uint64_t total_ = 0;
};

Histogram1D build_histogram_1d(const GrayImage& img);

struct Threshold1D {
    GrayLevel t_star = 0;
    double q = 0.0;
    double criterion = 0.0;
};

// One-dimensional counterpart of the 2D criterion: classes [0,t] and
// [t+1,255] normalized by P(t) and 1 - P(t). Shannon at q == 1; ties go
// to the smallest t. Throws InvalidQ or DegenerateHistogram.
Threshold1D find_threshold_1d(const Histogram1D& h, double q);

} // namespace tsallis
