#include "tsallis/imgio.hpp"

#include "tsallis/errors.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

namespace tsallis {

GrayImage::GrayImage(int width, int height, std::vector<GrayLevel> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels))
{
    if (width <= 0 || height <= 0)
        throw InvalidParams("image dimensions must be positive");
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
        throw InvalidParams("pixel count does not match " + std::to_string(width) + "x" + std::to_string(height));
}

GrayImage::GrayImage(int width, int height, GrayLevel fill)
    : GrayImage(width, height,
                std::vector<GrayLevel>(static_cast<std::size_t>(width > 0 ? width : 0) *
                                           static_cast<std::size_t>(height > 0 ? height : 0),
                                       fill))
{
}

BinaryImage::BinaryImage(GrayImage img) : img_(std::move(img))
{
    for (GrayLevel v : img_.pixels())
        if (v != kBlack && v != kWhite)
            throw InvalidParams("binary image pixels must be 0 or 255");
}

namespace {

class PgmReader {
public:
    explicit PgmReader(std::string_view data) : data_(data) {}

    // Skips whitespace and '#' comments (to end of line).
    void skip_space()
    {
        while (pos_ < data_.size()) {
            char c = data_[pos_];
            if (c == '#') {
                while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r')
                    ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    // Returns false at end of input.
    bool read_uint(unsigned long& value)
    {
        skip_space();
        if (pos_ >= data_.size())
            return false;
        std::size_t start = pos_;
        value = 0;
        while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) {
            value = value * 10 + static_cast<unsigned long>(data_[pos_] - '0');
            if (value > 0xFFFFFFFFul)
                throw MalformedHeader("numeric field too large");
            ++pos_;
        }
        if (pos_ == start)
            throw MalformedHeader(std::string("unexpected character '") + data_[pos_] + "'");
        return true;
    }

    unsigned long header_field(const char* name)
    {
        unsigned long v = 0;
        if (!read_uint(v))
            throw MalformedHeader(std::string("missing ") + name);
        return v;
    }

    std::size_t pos() const { return pos_; }
    void advance(std::size_t n) { pos_ += n; }
    std::size_t remaining() const { return data_.size() - pos_; }
    std::string_view data() const { return data_; }

private:
    std::string_view data_;
    std::size_t pos_ = 0;
};

template <typename Image>
std::string encode(const Image& img, PgmVariant variant)
{
    std::string out = (variant == PgmVariant::P2) ? "P2\n" : "P5\n";
    out += std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
    auto px = img.pixels();
    if (variant == PgmVariant::P5) {
        out.append(reinterpret_cast<const char*>(px.data()), px.size());
        return out;
    }
    // One raster row per line.
    const auto w = static_cast<std::size_t>(img.width());
    for (std::size_t i = 0; i < px.size(); ++i) {
        out += std::to_string(px[i]);
        out += ((i + 1) % w == 0) ? '\n' : ' ';
    }
    return out;
}

} // namespace

GrayImage read_pgm(std::string_view bytes)
{
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        throw MalformedHeader("bad magic, expected P2 or P5");
    const bool binary = bytes[1] == '5';

    PgmReader in(bytes.substr(2));
    if (in.remaining() > 0 && !std::isspace(static_cast<unsigned char>(in.data()[0])) && in.data()[0] != '#')
        throw MalformedHeader("bad magic, expected P2 or P5");

    unsigned long width = in.header_field("width");
    unsigned long height = in.header_field("height");
    unsigned long maxval = in.header_field("maxval");
    if (width == 0 || height == 0 || width > 0x7FFFFFFFul || height > 0x7FFFFFFFul)
        throw MalformedHeader("invalid dimensions");
    if (maxval == 0)
        throw MalformedHeader("maxval must be positive");
    if (maxval > 255)
        throw UnsupportedMaxval("maxval " + std::to_string(maxval) + " exceeds 255");

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<GrayLevel> pixels;
    pixels.reserve(count);

    if (binary) {
        // Exactly one whitespace byte separates maxval from the raster.
        if (in.remaining() == 0 || !std::isspace(static_cast<unsigned char>(in.data()[in.pos()])))
            throw TruncatedData("missing raster");
        in.advance(1);
        if (in.remaining() < count)
            throw TruncatedData("expected " + std::to_string(count) + " samples, got " +
                                std::to_string(in.remaining()));
        for (std::size_t i = 0; i < count; ++i) {
            auto v = static_cast<unsigned char>(in.data()[in.pos() + i]);
            if (v > maxval)
                throw MalformedHeader("sample exceeds maxval");
            pixels.push_back(v);
        }
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            unsigned long v = 0;
            if (!in.read_uint(v))
                throw TruncatedData("expected " + std::to_string(count) + " samples, got " + std::to_string(i));
            if (v > maxval)
                throw MalformedHeader("sample exceeds maxval");
            pixels.push_back(static_cast<GrayLevel>(v));
        }
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

GrayImage read_pgm(std::span<const std::byte> bytes)
{
    return read_pgm(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

GrayImage read_pgm_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot open " + path);
    std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return read_pgm(std::string_view(data));
}

std::string write_pgm(const GrayImage& img, PgmVariant variant) { return encode(img, variant); }

std::string write_pgm(const BinaryImage& img, PgmVariant variant) { return encode(img, variant); }

void write_pgm_file(const std::string& path, const GrayImage& img, PgmVariant variant)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw Error("cannot write " + path);
    const std::string data = write_pgm(img, variant);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!f)
        throw Error("write failed for " + path);
}

BinaryImage binarize(const GrayImage& img, GrayLevel t)
{
    std::vector<GrayLevel> out(img.size());
    auto src = img.pixels();
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = src[i] <= t ? BinaryImage::kBlack : BinaryImage::kWhite;
    return BinaryImage(GrayImage(img.width(), img.height(), std::move(out)));
}

} // namespace tsallis
