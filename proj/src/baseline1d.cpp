#include "tsallis/baseline1d.hpp"

#include "tsallis/entropy.hpp"
#include "tsallis/errors.hpp"

#include <cmath>

namespace tsallis {

Histogram1D::Histogram1D(const std::array<std::uint64_t, kLevels>& counts) : counts_(counts)
{
    for (auto c : counts_)
        total_ += c;
    if (total_ == 0)
        throw InvalidParams("1D histogram is empty");
    for (int v = 0; v < kLevels; ++v)
        pmf_[v] = static_cast<double>(counts_[v]) / static_cast<double>(total_);
}

Histogram1D build_histogram_1d(const GrayImage& img)
{
    std::array<std::uint64_t, Histogram1D::kLevels> counts{};
    for (GrayLevel v : img.pixels())
        ++counts[v];
    return Histogram1D(counts);
}

Threshold1D find_threshold_1d(const Histogram1D& h, double q)
{
    if (!(q > 0.0) || !std::isfinite(q))
        throw InvalidQ("entropic index q must be a positive finite number");

    constexpr int kN = Histogram1D::kLevels;
    const bool shannon = q == 1.0;

    // tail[v] = sum of terms over [v, 255], so the upper class is read
    // without subtracting from a total.
    std::array<double, kN + 1> tail{};
    for (int v = kN - 1; v >= 0; --v)
        tail[v] = tail[v + 1] + power_term(h.p(v), q);

    const auto total = static_cast<double>(h.total());
    std::uint64_t below = 0;
    double head = 0.0;
    Threshold1D best{0, q, kInvalidCriterion};
    bool found = false;
    for (int t = 0; t < kN; ++t) {
        below += h.count(t);
        head += power_term(h.p(t), q);
        if (below == 0 || below == h.total())
            continue;

        ClassEntropies e;
        e.valid = true;
        e.p2 = static_cast<double>(below) / total;
        const double upper = static_cast<double>(h.total() - below) / total;
        if (shannon) {
            e.sA = shannon_class_entropy(head, e.p2);
            e.sB = shannon_class_entropy(tail[t + 1], upper);
        } else {
            e.sA = tsallis_class_entropy(head, e.p2, q);
            e.sB = tsallis_class_entropy(tail[t + 1], upper, q);
        }
        const double value = combine_pseudo_additive(e, q);
        if (!found || value > best.criterion) {
            best.t_star = static_cast<GrayLevel>(t);
            best.criterion = value;
            found = true;
        }
    }
    if (!found)
        throw DegenerateHistogram("fewer than two occupied gray levels");
    return best;
}

} // namespace tsallis
