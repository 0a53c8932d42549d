#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "qcolor/colorcodec.hpp"

namespace qcolor {

// Row-major RGB pixel buffer.
struct ImageBuffer {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<RgbColor> pixels;

    ImageBuffer() = default;
    ImageBuffer(std::size_t w, std::size_t h, RgbColor fill = {})
        : width(w), height(h), pixels(w * h, fill) {}

    std::size_t index_of(std::size_t x, std::size_t y) const { return y * width + x; }

    RgbColor& at(std::size_t x, std::size_t y) { return pixels[index_of(x, y)]; }
    const RgbColor& at(std::size_t x, std::size_t y) const { return pixels[index_of(x, y)]; }

    bool operator==(const ImageBuffer&) const = default;
};

// Format is picked by extension: .png when compiled with PNG support,
// anything else is treated as binary PPM (P6, maxval 255).
// PPM save-then-load reproduces pixels bit-exactly.
// Throws ParseError (with byte offset) on malformed PPM input, FormatError
// on unsupported variants, Error on I/O failure.
ImageBuffer load_image(const std::filesystem::path& path);
void save_image(const ImageBuffer& image, const std::filesystem::path& path);

// PPM P6 codec over in-memory bytes.
ImageBuffer decode_ppm(const std::vector<unsigned char>& bytes);
std::vector<unsigned char> encode_ppm(const ImageBuffer& image);

// True when PNG support was compiled in.
bool png_supported();

} // namespace qcolor
