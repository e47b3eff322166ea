#include "rldoc/codec.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "rldoc/error.hpp"

namespace rldoc {

BitonalImage::BitonalImage(std::size_t height, std::size_t width, std::uint8_t fill)
    : height_(height), width_(width) {
    if (height == 0 || width == 0) {
        throw std::invalid_argument("image dimensions must be at least 1x1");
    }
    pixels_.assign(height * width, fill ? 1 : 0);
}

std::size_t RleDocument::padded_width() const {
    std::size_t widest = 0;
    for (const RunRow& row : rows) {
        widest = std::max(widest, row.size());
    }
    return widest;
}

void validate(const RleDocument& doc) {
    if (doc.height == 0 || doc.width == 0) {
        throw FormatError(FormatErrorCode::dimension_mismatch, 0,
                          "document must be at least 1x1");
    }
    if (doc.rows.size() != doc.height) {
        throw FormatError(FormatErrorCode::dimension_mismatch, 0,
                          "expected " + std::to_string(doc.height) + " rows, have " +
                              std::to_string(doc.rows.size()));
    }
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        const RunRow& row = doc.rows[r];
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0 && row[i] == 0) {
                throw FormatError(FormatErrorCode::non_alternating_zero, 0,
                                  "row " + std::to_string(r + 1) + ", run " +
                                      std::to_string(i + 1));
            }
            sum += row[i];
        }
        if (sum != doc.width) {
            throw FormatError(FormatErrorCode::invalid_run_sum, 0,
                              "row " + std::to_string(r + 1) + " sums to " +
                                  std::to_string(sum) + ", expected " +
                                  std::to_string(doc.width));
        }
    }
}

RleDocument encode_rle(const BitonalImage& image) {
    RleDocument doc;
    doc.height = image.height();
    doc.width = image.width();
    doc.rows.resize(doc.height);
    for (std::size_t r = 0; r < doc.height; ++r) {
        const std::uint8_t* px = image.row(r);
        RunRow& runs = doc.rows[r];
        std::uint8_t color = 0; // white first
        RunLength length = 0;
        for (std::size_t c = 0; c < doc.width; ++c) {
            if (px[c] == color) {
                ++length;
            } else {
                runs.push_back(length);
                color ^= 1;
                length = 1;
            }
        }
        runs.push_back(length);
    }
    return doc;
}

BitonalImage decode_rle(const RleDocument& doc) {
    validate(doc);
    BitonalImage image(doc.height, doc.width);
    for (std::size_t r = 0; r < doc.height; ++r) {
        std::uint8_t* px = image.row(r);
        std::size_t at = 0;
        const RunRow& runs = doc.rows[r];
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (i & 1) {
                std::memset(px + at, 1, runs[i]);
            }
            at += runs[i];
        }
    }
    return image;
}

PaddedRunMatrix padded_matrix_view(const RleDocument& doc) {
    PaddedRunMatrix matrix;
    matrix.rows = doc.height;
    matrix.cols = doc.padded_width();
    matrix.values.assign(matrix.rows * matrix.cols, 0);
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        std::copy(doc.rows[r].begin(), doc.rows[r].end(),
                  matrix.values.begin() + static_cast<std::ptrdiff_t>(r * matrix.cols));
    }
    return matrix;
}

BitonalImage transpose(const BitonalImage& image) {
    BitonalImage out(image.width(), image.height());
    for (std::size_t r = 0; r < image.height(); ++r) {
        const std::uint8_t* px = image.row(r);
        for (std::size_t c = 0; c < image.width(); ++c) {
            out.set(c, r, px[c]);
        }
    }
    return out;
}

} // namespace rldoc
