#include "tsallis/search.hpp"

#include "tsallis/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tsallis {

std::string_view to_string(SearchMode mode)
{
    return mode == SearchMode::Full ? "full" : "diag";
}

namespace {

constexpr int kN = JointHistogram::kLevels;

// Tracks the running maximum. Candidates must arrive in lexicographic
// order so that strict comparison keeps the smallest maximizer.
struct ArgmaxTracker {
    ThresholdResult best;
    bool found = false;

    void offer(int t, int s, double value)
    {
        ++best.candidates_evaluated;
        if (value == kInvalidCriterion || std::isnan(value))
            return;
        if (!found || value > best.criterion) {
            best.t_star = static_cast<GrayLevel>(t);
            best.s_star = static_cast<GrayLevel>(s);
            best.criterion = value;
            found = true;
        }
    }

    ThresholdResult finish(double q, SearchMode mode)
    {
        if (!found)
            throw DegenerateHistogram("no threshold separates the histogram into two nonempty classes");
        best.q = q;
        best.mode = mode;
        return best;
    }
};

template <typename Eval>
ThresholdResult scan(SearchMode mode, double q, Eval eval)
{
    ArgmaxTracker tracker;
    if (mode == SearchMode::Diagonal) {
        for (int t = 0; t < kN; ++t)
            tracker.offer(t, t, eval(t, t));
    } else {
        for (int t = 0; t < kN; ++t)
            for (int s = 0; s < kN; ++s)
                tracker.offer(t, s, eval(t, s));
    }
    return tracker.finish(q, mode);
}

ThresholdPair pair_of(int t, int s)
{
    return {static_cast<GrayLevel>(t), static_cast<GrayLevel>(s)};
}

} // namespace

CriterionSurface::CriterionSurface(double q, std::vector<double> values) : q_(q), values_(std::move(values))
{
    if (values_.size() != static_cast<std::size_t>(kLevels) * kLevels)
        throw InvalidParams("criterion surface needs 256x256 values");
}

ThresholdResult CriterionSurface::argmax(SearchMode mode) const
{
    return scan(mode, q_, [this](int t, int s) { return at(t, s); });
}

ThresholdResult find_threshold(const PrefixTables& tbl, SearchMode mode)
{
    return scan(mode, tbl.q(), [&tbl](int t, int s) { return criterion(tbl, pair_of(t, s)); });
}

ThresholdResult find_threshold(const JointHistogram& hist, double q, SearchMode mode)
{
    return find_threshold(build_prefix_tables(hist, q), mode);
}

CriterionSurface criterion_surface(const PrefixTables& tbl)
{
    std::vector<double> values(static_cast<std::size_t>(kN) * kN);
    for (int t = 0; t < kN; ++t)
        for (int s = 0; s < kN; ++s)
            values[static_cast<std::size_t>(t) * kN + s] = criterion(tbl, pair_of(t, s));
    return CriterionSurface(tbl.q(), std::move(values));
}

CriterionSurface criterion_surface(const JointHistogram& hist, double q)
{
    return criterion_surface(build_prefix_tables(hist, q));
}

double max_background_normalizer_gap(const PrefixTables& tbl, SearchMode mode)
{
    double gap = 0.0;
    auto visit = [&](int t, int s) {
        const std::uint64_t n2 = tbl.cum_count(t + 1, s + 1);
        if (n2 > 0 && n2 < tbl.total())
            gap = std::max(gap, background_normalizer_gap(tbl, pair_of(t, s)));
    };
    for (int t = 0; t < kN; ++t) {
        if (mode == SearchMode::Diagonal) {
            visit(t, t);
            continue;
        }
        for (int s = 0; s < kN; ++s)
            visit(t, s);
    }
    return gap;
}

} // namespace tsallis
