#include <gtest/gtest.h>

#include <png.h>

#include <filesystem>
#include <random>
#include <string>

#include "vectorforge/raster.hpp"

using namespace vectorforge;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("vectorforge_test_" + name);
}

}  // namespace

TEST(ChannelAbsDiff, Examples) {
    EXPECT_EQ(channel_abs_diff({10, 10, 10}, {10, 10, 10}), 0);
    EXPECT_EQ(channel_abs_diff({0, 0, 0}, {255, 0, 0}), 255);
    EXPECT_EQ(channel_abs_diff({10, 20, 30}, {5, 50, 31}), 30);
}

TEST(ChannelAbsDiff, SymmetricAndZeroOnlyForEqualPixels) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(0, 255);
    for (int i = 0; i < 5000; ++i) {
        // Small palette so equal pairs occur often.
        auto pick = [&] { return std::uint8_t(c(rng) % 4 * 60); };
        const Rgb p{pick(), pick(), pick()};
        const Rgb q{pick(), pick(), pick()};
        EXPECT_EQ(channel_abs_diff(p, q), channel_abs_diff(q, p));
        EXPECT_EQ(channel_abs_diff(p, q) == 0, p == q);
    }
}

TEST(RasterImage, RejectsEmptyDimensions) {
    EXPECT_THROW(RasterImage(0, 3), FormatError);
    EXPECT_THROW(RasterImage(3, 0), FormatError);
    EXPECT_THROW(RasterImage(2, 2, std::vector<Rgb>(3)), FormatError);
}

TEST(DecodePpm, SinglePixel) {
    auto data = bytes_of("P6\n1 1\n255\n");
    data.insert(data.end(), {255, 0, 0});
    const RasterImage img = decode_ppm(data);
    EXPECT_EQ(img.width(), 1);
    EXPECT_EQ(img.height(), 1);
    EXPECT_EQ(img.at(0, 0), (Rgb{255, 0, 0}));
}

TEST(DecodePpm, KeepsRowMajorOrder) {
    auto data = bytes_of("P6\n# comment line\n2 2\n255\n");
    data.insert(data.end(), {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    const RasterImage img = decode_ppm(data);
    EXPECT_EQ(img.at(0, 0), (Rgb{1, 2, 3}));
    EXPECT_EQ(img.at(1, 0), (Rgb{4, 5, 6}));
    EXPECT_EQ(img.at(0, 1), (Rgb{7, 8, 9}));
    EXPECT_EQ(img.at(1, 1), (Rgb{10, 11, 12}));
}

TEST(DecodePpm, MalformedInputs) {
    EXPECT_THROW(decode_ppm(bytes_of("P6\n2")), FormatError);
    EXPECT_THROW(decode_ppm(bytes_of("P6\n1 1\n255\n\x01")), FormatError);
    EXPECT_THROW(decode_ppm(bytes_of("P6\n0 1\n255\n")), FormatError);
    EXPECT_THROW(decode_ppm(bytes_of("P6\n1 1\n65535\n\x01\x02\x03\x04\x05\x06")), FormatError);
    EXPECT_THROW(decode_ppm(bytes_of("P3\n1 1\n255\n1 2 3\n")), FormatError);
}

TEST(DecodePpm, EncodeRoundTrip) {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(0, 255);
    for (int trial = 0; trial < 20; ++trial) {
        RasterImage img(1 + trial % 7, 1 + trial % 5);
        for (Rgb& p : img.pixels()) p = {std::uint8_t(c(rng)), std::uint8_t(c(rng)), std::uint8_t(c(rng))};
        EXPECT_EQ(decode_ppm(encode_ppm(img)), img);
    }
}

TEST(LoadImage, MissingFileIsIoError) {
    EXPECT_THROW(load_image(temp_path("does_not_exist.ppm")), IoError);
}

TEST(LoadImage, UnknownFormatIsFormatError) {
    const auto path = temp_path("garbage.bin");
    const auto data = bytes_of("GIF89a not an image");
    write_file_bytes(path, data);
    EXPECT_THROW(load_image(path), FormatError);
    std::filesystem::remove(path);
}

TEST(LoadImage, ReadsPpmFromDisk) {
    RasterImage img(3, 2);
    img.at(2, 1) = {9, 8, 7};
    const auto path = temp_path("disk.ppm");
    write_ppm(path, img);
    EXPECT_EQ(load_image(path), img);
    std::filesystem::remove(path);
}

TEST(DecodePng, RejectsCorruptData) {
    std::vector<std::uint8_t> data = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n', 0, 0, 0, 1};
    EXPECT_THROW(decode_png(data), FormatError);
}

TEST(DecodePng, DropsAlphaAndKeepsOrder) {
    const std::uint8_t rgba[] = {255, 0, 0, 255, 0, 255, 0, 128, 0, 0, 255, 0, 10, 20, 30, 255};
    png_image image{};
    image.version = PNG_IMAGE_VERSION;
    image.width = 2;
    image.height = 2;
    image.format = PNG_FORMAT_RGBA;
    png_alloc_size_t size = 0;
    ASSERT_TRUE(png_image_write_to_memory(&image, nullptr, &size, 0, rgba, 0, nullptr));
    std::vector<std::uint8_t> data(size);
    ASSERT_TRUE(png_image_write_to_memory(&image, data.data(), &size, 0, rgba, 0, nullptr));
    data.resize(size);

    const RasterImage img = decode_png(data);
    ASSERT_EQ(img.width(), 2);
    ASSERT_EQ(img.height(), 2);
    EXPECT_EQ(img.at(0, 0), (Rgb{255, 0, 0}));
    EXPECT_EQ(img.at(1, 0), (Rgb{0, 255, 0}));
    EXPECT_EQ(img.at(0, 1), (Rgb{0, 0, 255}));
    EXPECT_EQ(img.at(1, 1), (Rgb{10, 20, 30}));
}
