#pragma once

#include "tsallis/entropy.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace tsallis {

enum class SearchMode {
    Full,     // all 256^2 pairs
    Diagonal, // the 256 pairs with t == s
};

std::string_view to_string(SearchMode mode);

struct ThresholdResult {
    GrayLevel t_star = 0;
    GrayLevel s_star = 0;
    double q = 0.0;
    double criterion = 0.0;
    SearchMode mode = SearchMode::Diagonal;
    std::size_t candidates_evaluated = 0;
};

// Criterion over every (t, s); invalid pairs hold kInvalidCriterion.
class CriterionSurface {
public:
    static constexpr int kLevels = JointHistogram::kLevels;

    CriterionSurface(double q, std::vector<double> values);

    double q() const { return q_; }
    double at(int t, int s) const { return values_[static_cast<std::size_t>(t) * kLevels + s]; }
    std::span<const double> values() const { return values_; }

    // Lexicographically smallest maximizer; DegenerateHistogram if every
    // entry is invalid.
    ThresholdResult argmax(SearchMode mode = SearchMode::Full) const;

private:
    double q_;
    std::vector<double> values_;
};

// Maximizes the criterion over the candidates of `mode`. Ties go to the
// smallest t, then the smallest s. Throws InvalidQ or DegenerateHistogram.
ThresholdResult find_threshold(const JointHistogram& hist, double q, SearchMode mode);
// Same, reusing prebuilt tables (their q is used).
ThresholdResult find_threshold(const PrefixTables& tbl, SearchMode mode);

CriterionSurface criterion_surface(const JointHistogram& hist, double q);
CriterionSurface criterion_surface(const PrefixTables& tbl);

// Largest background_normalizer_gap over the valid candidates of `mode`.
double max_background_normalizer_gap(const PrefixTables& tbl, SearchMode mode);

} // namespace tsallis
