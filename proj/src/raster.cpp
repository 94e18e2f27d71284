#include "vectorforge/raster.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

namespace vectorforge {

int channel_abs_diff(Rgb p, Rgb q) {
    const int dr = std::abs(int(p.r) - int(q.r));
    const int dg = std::abs(int(p.g) - int(q.g));
    const int db = std::abs(int(p.b) - int(q.b));
    return std::max({dr, dg, db});
}

RasterImage::RasterImage(int width, int height, Rgb fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw FormatError("image dimensions must be positive");
    }
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

RasterImage::RasterImage(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1) {
        throw FormatError("image dimensions must be positive");
    }
    if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
        throw FormatError("pixel count does not match dimensions");
    }
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "'");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read failed for '" + path.string() + "'");
    }
    return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write failed for '" + path.string() + "'");
    }
}

namespace {

// Netpbm header tokenizer: whitespace separated, '#' comments to end of line.
class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    long next_int() {
        skip_space_and_comments();
        long value = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > 1'000'000) throw FormatError("PPM header value out of range");
            ++pos_;
            ++digits;
        }
        if (digits == 0) throw FormatError("truncated or malformed PPM header");
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw FormatError("truncated or malformed PPM header");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 2;
};

bool has_png_signature(std::span<const std::uint8_t> bytes) {
    static constexpr std::uint8_t kSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    return bytes.size() >= 8 && std::memcmp(bytes.data(), kSig, 8) == 0;
}

}  // namespace

RasterImage decode_ppm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        throw FormatError("not a binary PPM (P6) file");
    }
    HeaderReader header(bytes);
    const long width = header.next_int();
    const long height = header.next_int();
    const long maxval = header.next_int();
    if (width < 1 || height < 1) throw FormatError("PPM has zero dimension");
    if (maxval != 255) throw FormatError("only PPM maxval 255 is supported");
    const std::size_t offset = header.raster_offset();
    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() < offset + 3 * count) throw FormatError("truncated PPM raster");

    std::vector<Rgb> pixels(count);
    const std::uint8_t* src = bytes.data() + offset;
    for (std::size_t i = 0; i < count; ++i) {
        pixels[i] = {src[3 * i], src[3 * i + 1], src[3 * i + 2]};
    }
    return RasterImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

RasterImage decode_png(std::span<const std::uint8_t> bytes) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, bytes.data(), bytes.size())) {
        throw FormatError(std::string("PNG decode failed: ") + image.message);
    }
    if (image.width == 0 || image.height == 0) {
        png_image_free(&image);
        throw FormatError("PNG has zero dimension");
    }
    // Decode as RGBA and discard alpha ourselves; PNG_FORMAT_RGB would composite.
    image.format = PNG_FORMAT_RGBA;
    std::vector<std::uint8_t> rgba(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, rgba.data(), 0, nullptr)) {
        const std::string msg = image.message;
        png_image_free(&image);
        throw FormatError("PNG decode failed: " + msg);
    }
    const std::size_t count = static_cast<std::size_t>(image.width) * image.height;
    std::vector<Rgb> pixels(count);
    for (std::size_t i = 0; i < count; ++i) {
        pixels[i] = {rgba[4 * i], rgba[4 * i + 1], rgba[4 * i + 2]};
    }
    return RasterImage(static_cast<int>(image.width), static_cast<int>(image.height),
                       std::move(pixels));
}

RasterImage load_image(const std::filesystem::path& path) {
    const auto bytes = read_file_bytes(path);
    if (has_png_signature(bytes)) return decode_png(bytes);
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') return decode_ppm(bytes);
    throw FormatError("'" + path.string() + "' is neither PNG nor binary PPM");
}

std::vector<std::uint8_t> encode_ppm(const RasterImage& img) {
    const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                               std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(header.size() + 3 * img.size());
    for (const Rgb& p : img.pixels()) {
        out.push_back(p.r);
        out.push_back(p.g);
        out.push_back(p.b);
    }
    return out;
}

void write_ppm(const std::filesystem::path& path, const RasterImage& img) {
    write_file_bytes(path, encode_ppm(img));
}

void write_pgm(const std::filesystem::path& path, int width, int height,
               std::span<const std::uint8_t> gray) {
    const std::string header =
        "P5\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), gray.begin(), gray.end());
    write_file_bytes(path, out);
}

void write_pbm(const std::filesystem::path& path, int width, int height,
               std::span<const std::uint8_t> bits) {
    const std::string header = "P4\n" + std::to_string(width) + " " + std::to_string(height) + "\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const int row_bytes = (width + 7) / 8;
    for (int y = 0; y < height; ++y) {
        std::vector<std::uint8_t> row(static_cast<std::size_t>(row_bytes), 0);
        for (int x = 0; x < width; ++x) {
            if (bits[static_cast<std::size_t>(y) * width + x]) {
                row[x / 8] |= static_cast<std::uint8_t>(0x80 >> (x % 8));
            }
        }
        out.insert(out.end(), row.begin(), row.end());
    }
    write_file_bytes(path, out);
}

}  // namespace vectorforge
