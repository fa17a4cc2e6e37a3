#pragma once

#include "tsallis/histogram.hpp"

#include <limits>

namespace tsallis {

// Candidate split: t thresholds the pixel value, s the neighborhood average.
// Object class is [0,t] x [0,s]; background class is [t+1,255] x [s+1,255].
struct ThresholdPair {
    GrayLevel t = 0;
    GrayLevel s = 0;

    friend bool operator==(const ThresholdPair&, const ThresholdPair&) = default;
};

struct ClassEntropies {
    double sA = 0.0;
    double sB = 0.0;
    double p2 = 0.0;
    // 0 < p2 < 1. sA and sB are meaningless otherwise.
    bool valid = false;
};

inline constexpr double kInvalidCriterion = -std::numeric_limits<double>::infinity();

// Object-class mass, exact ratio of integer counts.
double class_probability_p2(const PrefixTables& tbl, ThresholdPair pair);

// Entropy of one class from its raw sum and mass. `sum` is the class sum of
// p^q (Tsallis) or p*ln(p) (Shannon); the normalized class distribution is
// p / mass. A single-cell class yields exactly 0.
double tsallis_class_entropy(double sum_pq, double mass, double q);
double shannon_class_entropy(double sum_plnp, double mass);

// Background is normalized by 1 - P2, not by its own quadrant mass.
// Requires tables built with q != 1.
ClassEntropies tsallis_class_entropies(const PrefixTables& tbl, ThresholdPair pair);
// Requires tables built with q == 1.
ClassEntropies shannon_class_entropies(const PrefixTables& tbl, ThresholdPair pair);

// sA + sB + (1-q) sA sB, or sA + sB at q == 1; kInvalidCriterion when the
// split is invalid.
double combine_pseudo_additive(const ClassEntropies& e, double q);

// Dispatches on tbl.q(): Shannon path at exactly q == 1, Tsallis otherwise.
double criterion(const PrefixTables& tbl, ThresholdPair pair);

// (1 - P2) - P4: the mass in the two ignored quadrants, i.e. the error of
// the background normalizer approximation.
double background_normalizer_gap(const PrefixTables& tbl, ThresholdPair pair);

} // namespace tsallis
