#pragma once

#include "tsallis/imgio.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace tsallis {

namespace detail {
// Rows/columns dropped at each image edge before averaging. A 3x3 window
// needs 1; 2 gives the wider exclusion some references describe.
inline constexpr int kBorderExclusion = 1;
} // namespace detail

// floor(mean) of the 3x3 neighborhood for every pixel at least `border`
// pixels from the edge. Element (x, y) corresponds to source pixel
// (x + border, y + border).
class AvgImage {
public:
    AvgImage(int width, int height, int border, std::vector<GrayLevel> values);

    int width() const { return width_; }
    int height() const { return height_; }
    int border() const { return border_; }
    GrayLevel operator()(int x, int y) const { return values_[static_cast<std::size_t>(y) * width_ + x]; }
    std::span<const GrayLevel> values() const { return values_; }

private:
    int width_;
    int height_;
    int border_;
    std::vector<GrayLevel> values_;
};

// Throws ImageTooSmall if either dimension is below 2*border + 1 (3 for
// the default exclusion).
AvgImage neighborhood_average(const GrayImage& img, int border = detail::kBorderExclusion);

// 256x256 joint counts of (pixel value i, neighborhood average j) and the
// pmf p(i,j) = count(i,j) / total.
class JointHistogram {
public:
    static constexpr int kLevels = kGrayLevels;

    // Throws InvalidParams unless counts has 256*256 entries with a
    // positive sum.
    explicit JointHistogram(std::vector<std::uint64_t> counts);

    std::uint64_t count(int i, int j) const { return counts_[index(i, j)]; }
    double p(int i, int j) const { return pmf_[index(i, j)]; }
    std::uint64_t total() const { return total_; }

    std::span<const std::uint64_t> counts() const { return counts_; }
    std::span<const double> pmf() const { return pmf_; }

    std::size_t occupied_cells() const;

    // Every count multiplied by k (k >= 1).
    JointHistogram scaled(std::uint64_t k) const;

    static std::size_t index(int i, int j) { return static_cast<std::size_t>(i) * kLevels + j; }

private:
    std::vector<std::uint64_t> counts_;
    std::vector<double> pmf_;
    std::uint64_t total_ = 0;
};

JointHistogram build_joint_histogram(const GrayImage& img, const AvgImage& avg);

// Shortcut for neighborhood_average + build_joint_histogram.
JointHistogram build_joint_histogram(const GrayImage& img);

enum class TableKind { P, Pq };

// Summed-area tables over the joint pmf. Entry (a, b) of a cumulative table
// holds the sum over i < a, j < b; tables are 257x257.
//
// The Pq table holds p^q for q != 1 and p*ln(p) for q == 1 (0^q = 0,
// 0*ln 0 = 0). Alongside the cumulative tables the object keeps integer
// count prefixes (for exact class emptiness tests) and "tail" tables
// summing i >= a, j >= b, so both class sums used by the criterion are read
// without inclusion-exclusion cancellation.
class PrefixTables {
public:
    static constexpr int kSize = JointHistogram::kLevels + 1;

    double q() const { return q_; }
    bool shannon() const { return q_ == 1.0; }

    double cum(TableKind which, int a, int b) const { return table(which)[at(a, b)]; }
    double tail(TableKind which, int a, int b) const { return tail_table(which)[at(a, b)]; }
    std::uint64_t cum_count(int a, int b) const { return base_->cum_count[at(a, b)]; }
    std::uint64_t tail_count(int a, int b) const { return base_->tail_count[at(a, b)]; }
    std::uint64_t total() const { return base_->total; }

    // Same histogram, new q. The q-independent tables are shared.
    PrefixTables with_q(double q) const;

    static std::size_t at(int a, int b) { return static_cast<std::size_t>(a) * kSize + b; }

private:
    friend PrefixTables build_prefix_tables(const JointHistogram&, double);

    struct Base {
        std::vector<double> pmf;
        std::vector<std::uint64_t> cum_count;
        std::vector<std::uint64_t> tail_count;
        std::vector<double> cum_p;
        std::vector<double> tail_p;
        std::uint64_t total = 0;
    };

    PrefixTables(std::shared_ptr<const Base> base, double q);
    const std::vector<double>& table(TableKind which) const { return which == TableKind::P ? base_->cum_p : cum_pq_; }
    const std::vector<double>& tail_table(TableKind which) const
    {
        return which == TableKind::P ? base_->tail_p : tail_pq_;
    }

    std::shared_ptr<const Base> base_;
    double q_;
    std::vector<double> cum_pq_;
    std::vector<double> tail_pq_;
};

// Throws InvalidQ unless q > 0 (and finite).
PrefixTables build_prefix_tables(const JointHistogram& hist, double q);

// Inclusive rectangle [i0, i1] x [j0, j1] by four-corner inclusion-exclusion
// on the cumulative table.
double rect_sum(const PrefixTables& tbl, TableKind which, int i0, int i1, int j0, int j1);

// p^q with 0^q = 0 for q != 1; p*ln(p) with 0*ln 0 = 0 for q == 1.
double power_term(double p, double q);

} // namespace tsallis
