#include "tsallis/histogram.hpp"

#include "tsallis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tsallis {

AvgImage::AvgImage(int width, int height, int border, std::vector<GrayLevel> values)
    : width_(width), height_(height), border_(border), values_(std::move(values))
{
    if (values_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw InvalidParams("average image size mismatch");
}

AvgImage neighborhood_average(const GrayImage& img, int border)
{
    if (border < 1)
        throw InvalidParams("border exclusion must be at least 1");
    const int min_side = 2 * border + 1;
    if (img.width() < min_side || img.height() < min_side)
        throw ImageTooSmall("image is " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                            ", need at least " + std::to_string(min_side) + " in each dimension");

    const int w = img.width() - 2 * border;
    const int h = img.height() - 2 * border;
    std::vector<GrayLevel> out(static_cast<std::size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        const int cy = y + border;
        for (int x = 0; x < w; ++x) {
            const int cx = x + border;
            unsigned sum = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    sum += img(cx + dx, cy + dy);
            out[static_cast<std::size_t>(y) * w + x] = static_cast<GrayLevel>(sum / 9);
        }
    }
    return AvgImage(w, h, border, std::move(out));
}

JointHistogram::JointHistogram(std::vector<std::uint64_t> counts) : counts_(std::move(counts))
{
    if (counts_.size() != static_cast<std::size_t>(kLevels) * kLevels)
        throw InvalidParams("joint histogram needs 256x256 counts");
    total_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
    if (total_ == 0)
        throw InvalidParams("joint histogram is empty");

    pmf_.resize(counts_.size());
    const auto total = static_cast<double>(total_);
    for (std::size_t k = 0; k < counts_.size(); ++k)
        pmf_[k] = static_cast<double>(counts_[k]) / total;
}

std::size_t JointHistogram::occupied_cells() const
{
    return static_cast<std::size_t>(std::count_if(counts_.begin(), counts_.end(), [](auto c) { return c != 0; }));
}

JointHistogram JointHistogram::scaled(std::uint64_t k) const
{
    if (k == 0)
        throw InvalidParams("scale factor must be positive");
    std::vector<std::uint64_t> c(counts_);
    for (auto& v : c)
        v *= k;
    return JointHistogram(std::move(c));
}

JointHistogram build_joint_histogram(const GrayImage& img, const AvgImage& avg)
{
    const int b = avg.border();
    if (avg.width() + 2 * b != img.width() || avg.height() + 2 * b != img.height())
        throw InvalidParams("average image does not match source image");

    std::vector<std::uint64_t> counts(static_cast<std::size_t>(JointHistogram::kLevels) * JointHistogram::kLevels, 0);
    for (int y = 0; y < avg.height(); ++y)
        for (int x = 0; x < avg.width(); ++x)
            ++counts[JointHistogram::index(img(x + b, y + b), avg(x, y))];
    return JointHistogram(std::move(counts));
}

JointHistogram build_joint_histogram(const GrayImage& img)
{
    return build_joint_histogram(img, neighborhood_average(img));
}

double power_term(double p, double q)
{
    if (p <= 0.0)
        return 0.0;
    const double lp = std::log(p);
    if (q == 1.0)
        return p * lp;
    return std::exp(q * lp);
}

namespace {

constexpr int kN = JointHistogram::kLevels;
constexpr int kS = PrefixTables::kSize;

// cum(a,b) = sum over i < a, j < b of cell(i,j).
template <typename T, typename Cell>
std::vector<T> summed_area(Cell cell)
{
    std::vector<T> cum(static_cast<std::size_t>(kS) * kS, T{});
    for (int a = 1; a < kS; ++a) {
        T row{};
        for (int b = 1; b < kS; ++b) {
            row += cell(a - 1, b - 1);
            cum[PrefixTables::at(a, b)] = cum[PrefixTables::at(a - 1, b)] + row;
        }
    }
    return cum;
}

// tail(a,b) = sum over i >= a, j >= b of cell(i,j).
template <typename T, typename Cell>
std::vector<T> summed_tail(Cell cell)
{
    std::vector<T> tail(static_cast<std::size_t>(kS) * kS, T{});
    for (int a = kN - 1; a >= 0; --a) {
        T row{};
        for (int b = kN - 1; b >= 0; --b) {
            row += cell(a, b);
            tail[PrefixTables::at(a, b)] = tail[PrefixTables::at(a + 1, b)] + row;
        }
    }
    return tail;
}

void check_q(double q)
{
    if (!(q > 0.0) || !std::isfinite(q))
        throw InvalidQ("entropic index q must be a positive finite number");
}

} // namespace

PrefixTables::PrefixTables(std::shared_ptr<const Base> base, double q) : base_(std::move(base)), q_(q)
{
    std::vector<double> terms(base_->pmf.size());
    for (std::size_t k = 0; k < terms.size(); ++k)
        terms[k] = power_term(base_->pmf[k], q);
    auto cell = [&](int i, int j) { return terms[JointHistogram::index(i, j)]; };
    cum_pq_ = summed_area<double>(cell);
    tail_pq_ = summed_tail<double>(cell);
}

PrefixTables PrefixTables::with_q(double q) const
{
    check_q(q);
    return PrefixTables(base_, q);
}

PrefixTables build_prefix_tables(const JointHistogram& hist, double q)
{
    check_q(q);
    auto base = std::make_shared<PrefixTables::Base>();
    base->pmf.assign(hist.pmf().begin(), hist.pmf().end());
    base->total = hist.total();

    auto count = [&](int i, int j) { return hist.count(i, j); };
    auto mass = [&](int i, int j) { return hist.p(i, j); };
    base->cum_count = summed_area<std::uint64_t>(count);
    base->tail_count = summed_tail<std::uint64_t>(count);
    base->cum_p = summed_area<double>(mass);
    base->tail_p = summed_tail<double>(mass);
    return PrefixTables(std::move(base), q);
}

double rect_sum(const PrefixTables& tbl, TableKind which, int i0, int i1, int j0, int j1)
{
    if (i0 < 0 || j0 < 0 || i0 > i1 || j0 > j1 || i1 >= kN || j1 >= kN)
        throw InvalidParams("rect_sum needs 0 <= lo <= hi <= 255 on both axes");
    return tbl.cum(which, i1 + 1, j1 + 1) - tbl.cum(which, i0, j1 + 1) - tbl.cum(which, i1 + 1, j0) +
           tbl.cum(which, i0, j0);
}

} // namespace tsallis
