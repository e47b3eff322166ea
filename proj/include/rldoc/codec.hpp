#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rldoc {

using RunLength = std::uint32_t;

/*
  Row-major bitonal pixel grid, one byte per pixel: 1 = black (ink),
  0 = white (background). This is the uncompressed domain every feature
  is verified against.
*/
class BitonalImage {
public:
    BitonalImage() = default;
    BitonalImage(std::size_t height, std::size_t width, std::uint8_t fill = 0);

    std::size_t height() const { return height_; }
    std::size_t width() const { return width_; }
    bool empty() const { return pixels_.empty(); }

    std::uint8_t at(std::size_t row, std::size_t col) const {
        return pixels_[row * width_ + col];
    }
    void set(std::size_t row, std::size_t col, std::uint8_t value) {
        pixels_[row * width_ + col] = value ? 1 : 0;
    }

    const std::uint8_t* row(std::size_t r) const { return pixels_.data() + r * width_; }
    std::uint8_t* row(std::size_t r) { return pixels_.data() + r * width_; }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }

    bool operator==(const BitonalImage&) const = default;

private:
    std::size_t height_ = 0;
    std::size_t width_ = 0;
    std::vector<std::uint8_t> pixels_;
};

// One compressed row: alternating run lengths, white first. The first run
// may be 0 when the pixel row starts black; every later run is >= 1.
// Odd positions (1st, 3rd, ...) are white, even positions are black.
using RunRow = std::vector<RunLength>;

struct RleDocument {
    std::size_t height = 0; // m, rows
    std::size_t width = 0;  // n, pixel width
    std::vector<RunRow> rows;

    // n': maximum run count over all rows (the padded column count).
    std::size_t padded_width() const;

    bool operator==(const RleDocument&) const = default;
};

// Throws FormatError if any document invariant is violated: m or n of zero,
// row count mismatch, a run sum != n, or a zero run after position 1.
void validate(const RleDocument& doc);

// Maximal-run decomposition of every pixel row, white-first.
// decode_rle(encode_rle(image)) == image, bit for bit.
RleDocument encode_rle(const BitonalImage& image);

// Exact inverse of encode_rle. Validates the document first.
BitonalImage decode_rle(const RleDocument& doc);

// Rectangular m x n' integer matrix: each row right-padded with zeros.
// The padding zeros are structural and carry no pixels.
struct PaddedRunMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0; // n'
    std::vector<RunLength> values; // row-major

    RunLength at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    bool operator==(const PaddedRunMatrix&) const = default;
};

PaddedRunMatrix padded_matrix_view(const RleDocument& doc);

BitonalImage transpose(const BitonalImage& image);

} // namespace rldoc
