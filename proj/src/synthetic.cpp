#include "tsallis/synthetic.hpp"

#include "tsallis/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace tsallis {

namespace {

std::uint64_t splitmix64(std::uint64_t& x)
{
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void validate(const SyntheticParams& p)
{
    if (p.width <= 0 || p.height <= 0)
        throw InvalidParams("synthetic image dimensions must be positive");
    if (p.kind == SyntheticKind::Constant) {
        if (p.value < 0 || p.value > 255)
            throw InvalidParams("constant value must be in [0, 255]");
        return;
    }
    const std::size_t classes = p.kind == SyntheticKind::Bimodal ? 2 : 3;
    if (p.means.size() != classes)
        throw InvalidParams("expected " + std::to_string(classes) + " means");
    if (p.sigmas.size() != 1 && p.sigmas.size() != classes)
        throw InvalidParams("expected 1 or " + std::to_string(classes) + " sigmas");
    for (double m : p.means)
        if (!std::isfinite(m))
            throw InvalidParams("means must be finite");
    for (double s : p.sigmas)
        if (!(s >= 0.0) || !std::isfinite(s))
            throw InvalidParams("sigmas must be nonnegative");
    if (!(p.mix > 0.0 && p.mix < 1.0))
        throw InvalidParams("mix must be in (0, 1)");
}

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed)
{
    for (auto& s : s_)
        s = splitmix64(seed);
}

std::uint64_t Xoshiro256::next()
{
    const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform()
{
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256::gaussian()
{
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(1.0 - u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SyntheticKind parse_synthetic_kind(std::string_view name)
{
    if (name == "bimodal")
        return SyntheticKind::Bimodal;
    if (name == "trimodal")
        return SyntheticKind::Trimodal;
    if (name == "constant")
        return SyntheticKind::Constant;
    throw InvalidParams("unknown synthetic kind '" + std::string(name) + "'");
}

std::vector<std::uint8_t> synthetic_labels(const SyntheticParams& params)
{
    validate(params);
    std::vector<std::uint8_t> labels(static_cast<std::size_t>(params.width) * params.height, 0);
    if (params.kind == SyntheticKind::Constant)
        return labels;

    const double cx = (params.width - 1) / 2.0;
    const double cy = (params.height - 1) / 2.0;
    const double r2 = params.mix * params.width * params.height / std::numbers::pi;
    const double core2 = r2 / 4.0;
    for (int y = 0; y < params.height; ++y) {
        for (int x = 0; x < params.width; ++x) {
            const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            std::uint8_t label = 0;
            if (d2 <= r2)
                label = (params.kind == SyntheticKind::Trimodal && d2 <= core2) ? 2 : 1;
            labels[static_cast<std::size_t>(y) * params.width + x] = label;
        }
    }
    return labels;
}

GrayImage generate_synthetic(const SyntheticParams& params)
{
    validate(params);
    if (params.kind == SyntheticKind::Constant)
        return GrayImage(params.width, params.height, static_cast<GrayLevel>(params.value));

    const auto labels = synthetic_labels(params);
    Xoshiro256 rng(params.seed);
    std::vector<GrayLevel> pixels(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
        const std::size_t c = labels[k];
        const double sigma = params.sigmas.size() == 1 ? params.sigmas[0] : params.sigmas[c];
        const double v = std::round(params.means[c] + sigma * rng.gaussian());
        pixels[k] = static_cast<GrayLevel>(std::clamp(v, 0.0, 255.0));
    }
    return GrayImage(params.width, params.height, std::move(pixels));
}

} // namespace tsallis
