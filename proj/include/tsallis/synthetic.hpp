#pragma once

#include "tsallis/imgio.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace tsallis {

// xoshiro256** seeded through splitmix64. Fixed constants so synthetic
// corpora are reproducible from any language:
//   splitmix64: x += 0x9E3779B97F4A7C15; z = x;
//               z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//               z = (z ^ (z >> 27)) * 0x94D049BB133111EB;  return z ^ (z >> 31)
//   state s[0..3] = four successive splitmix64 outputs from the seed
//   next():     r = rotl(s[1] * 5, 7) * 9; t = s[1] << 17;
//               s[2] ^= s[0]; s[3] ^= s[1]; s[1] ^= s[2]; s[0] ^= s[3];
//               s[2] ^= t; s[3] = rotl(s[3], 45);  return r
//   uniform():  (next() >> 11) * 2^-53, in [0, 1)
//   gaussian(): Box-Muller on two uniforms u1, u2 (cosine branch only):
//               sqrt(-2 ln(1 - u1)) * cos(2 pi u2)
class Xoshiro256 {
public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();
    double uniform();
    double gaussian();

private:
    std::uint64_t s_[4];
};

enum class SyntheticKind { Bimodal, Trimodal, Constant };

SyntheticKind parse_synthetic_kind(std::string_view name);

struct SyntheticParams {
    SyntheticKind kind = SyntheticKind::Bimodal;
    int width = 128;
    int height = 128;
    // Bimodal: {background, disk}. Trimodal: {background, ring, core}.
    std::vector<double> means = {64.0, 192.0};
    // One sigma per mean, or a single sigma shared by all classes.
    std::vector<double> sigmas = {10.0};
    // Area fraction covered by the outer disk.
    double mix = 0.3;
    // Constant kind only.
    int value = 0;
    std::uint64_t seed = 0;
};

// Each pixel takes its class from the shape layout (centered disk; for
// trimodal an inner disk of half the radius inside it), then draws
// round(mean + sigma * gaussian()) clipped to [0, 255]. Pixels are visited
// row-major and every pixel consumes one gaussian() even when sigma is 0.
// Throws InvalidParams.
GrayImage generate_synthetic(const SyntheticParams& params);

// Class index per pixel: 0 background, 1 disk (or ring), 2 core.
std::vector<std::uint8_t> synthetic_labels(const SyntheticParams& params);

} // namespace tsallis
