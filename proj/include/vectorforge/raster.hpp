#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "vectorforge/errors.hpp"

namespace vectorforge {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Max over the three channels of |p.c - q.c|.
int channel_abs_diff(Rgb p, Rgb q);

/// W×H row-major grid of RGB pixels. Width and height are always >= 1.
class RasterImage {
public:
    RasterImage(int width, int height, Rgb fill = {});
    RasterImage(int width, int height, std::vector<Rgb> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }

    const Rgb& at(int x, int y) const { return pixels_[index(x, y)]; }
    Rgb& at(int x, int y) { return pixels_[index(x, y)]; }

    std::span<const Rgb> pixels() const { return pixels_; }
    std::span<Rgb> pixels() { return pixels_; }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
               static_cast<std::size_t>(x);
    }

    friend bool operator==(const RasterImage&, const RasterImage&) = default;

private:
    int width_;
    int height_;
    std::vector<Rgb> pixels_;
};

/// Loads a PNG or binary PPM (P6, maxval 255). Alpha is dropped.
/// Throws IoError when the file cannot be read, FormatError otherwise.
RasterImage load_image(const std::filesystem::path& path);

RasterImage decode_ppm(std::span<const std::uint8_t> bytes);
RasterImage decode_png(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const RasterImage& img);

void write_ppm(const std::filesystem::path& path, const RasterImage& img);

// Debug dumps.
void write_pgm(const std::filesystem::path& path, int width, int height,
               std::span<const std::uint8_t> gray);
void write_pbm(const std::filesystem::path& path, int width, int height,
               std::span<const std::uint8_t> bits);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace vectorforge
