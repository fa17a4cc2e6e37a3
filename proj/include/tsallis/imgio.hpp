#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tsallis {

using GrayLevel = std::uint8_t;

inline constexpr int kGrayLevels = 256;

// 8-bit grayscale raster stored row-major. Immutable once built.
class GrayImage {
public:
    GrayImage() = default;
    // Throws InvalidParams when the pixel count does not match width*height
    // or a dimension is zero.
    GrayImage(int width, int height, std::vector<GrayLevel> pixels);
    GrayImage(int width, int height, GrayLevel fill);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    GrayLevel operator()(int x, int y) const { return pixels_[static_cast<std::size_t>(y) * width_ + x]; }
    std::span<const GrayLevel> pixels() const { return pixels_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<GrayLevel> pixels_;
};

// Output of binarize(): every pixel is kBlack or kWhite.
class BinaryImage {
public:
    static constexpr GrayLevel kBlack = 0;
    static constexpr GrayLevel kWhite = 255;

    BinaryImage() = default;
    // Throws InvalidParams if any pixel is outside {0, 255}.
    explicit BinaryImage(GrayImage img);

    int width() const { return img_.width(); }
    int height() const { return img_.height(); }
    GrayLevel operator()(int x, int y) const { return img_(x, y); }
    std::span<const GrayLevel> pixels() const { return img_.pixels(); }

    const GrayImage& as_gray() const { return img_; }

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    GrayImage img_;
};

enum class PgmVariant { P2, P5 };

// Parses a P2 (ASCII) or P5 (binary) PGM. Header comments are skipped.
// Samples are taken as-is when maxval < 255 (no rescaling).
GrayImage read_pgm(std::span<const std::byte> bytes);
GrayImage read_pgm(std::string_view bytes);
GrayImage read_pgm_file(const std::string& path);

std::string write_pgm(const GrayImage& img, PgmVariant variant = PgmVariant::P5);
std::string write_pgm(const BinaryImage& img, PgmVariant variant = PgmVariant::P5);
void write_pgm_file(const std::string& path, const GrayImage& img, PgmVariant variant = PgmVariant::P5);

// Pixels <= t become black, the rest white.
BinaryImage binarize(const GrayImage& img, GrayLevel t);

} // namespace tsallis
