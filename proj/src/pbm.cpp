#include "rldoc/pbm.hpp"

#include <cctype>

#include "rldoc/error.hpp"

namespace rldoc {

namespace {

constexpr std::size_t kMaxDimension = std::size_t{1} << 31;
constexpr std::size_t kMaxPixels = std::size_t{1} << 40;

struct Scanner {
    std::span<const std::uint8_t> bytes;
    std::size_t at = 0;

    bool done() const { return at >= bytes.size(); }
    std::uint8_t peek() const { return bytes[at]; }

    // Whitespace and '#' comments, anywhere a token separator is legal.
    void skip_separators() {
        while (!done()) {
            if (std::isspace(peek())) {
                ++at;
            } else if (peek() == '#') {
                while (!done() && peek() != '\n') {
                    ++at;
                }
            } else {
                break;
            }
        }
    }

    std::size_t read_dimension(const char* what) {
        skip_separators();
        if (done() || !std::isdigit(peek())) {
            throw FormatError(FormatErrorCode::malformed_header, at,
                              std::string("expected ") + what);
        }
        std::size_t value = 0;
        while (!done() && std::isdigit(peek())) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxDimension) {
                throw FormatError(FormatErrorCode::malformed_header, at,
                                  std::string(what) + " too large");
            }
            ++at;
        }
        if (value == 0) {
            throw FormatError(FormatErrorCode::malformed_header, at,
                              std::string(what) + " must be at least 1");
        }
        return value;
    }
};

BitonalImage read_plain(Scanner& scan) {
    const std::size_t width = scan.read_dimension("width");
    const std::size_t height = scan.read_dimension("height");
    if (height * width > kMaxPixels) {
        throw FormatError(FormatErrorCode::malformed_header, scan.at, "image too large");
    }
    BitonalImage image(height, width);
    for (std::size_t r = 0; r < height; ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            scan.skip_separators();
            if (scan.done()) {
                throw FormatError(FormatErrorCode::truncated_payload, scan.at,
                                  "pixel data ends early");
            }
            const std::uint8_t ch = scan.peek();
            if (ch != '0' && ch != '1') {
                throw FormatError(FormatErrorCode::malformed_payload, scan.at,
                                  "expected '0' or '1'");
            }
            image.set(r, c, ch == '1');
            ++scan.at;
        }
    }
    scan.skip_separators();
    if (!scan.done()) {
        throw FormatError(FormatErrorCode::malformed_payload, scan.at,
                          "trailing data after pixels");
    }
    return image;
}

BitonalImage read_raw(Scanner& scan) {
    const std::size_t width = scan.read_dimension("width");
    const std::size_t height = scan.read_dimension("height");
    if (height * width > kMaxPixels) {
        throw FormatError(FormatErrorCode::malformed_header, scan.at, "image too large");
    }
    // Exactly one whitespace byte separates the header from the raster.
    if (scan.done() || !std::isspace(scan.peek())) {
        throw FormatError(FormatErrorCode::malformed_header, scan.at,
                          "expected whitespace before raster");
    }
    ++scan.at;
    const std::size_t bytes_per_row = (width + 7) / 8;
    if (scan.bytes.size() - scan.at < height * bytes_per_row) {
        throw FormatError(FormatErrorCode::truncated_payload, scan.bytes.size(),
                          "raster ends early");
    }
    BitonalImage image(height, width);
    for (std::size_t r = 0; r < height; ++r) {
        const std::uint8_t* row_bytes = scan.bytes.data() + scan.at;
        std::uint8_t* px = image.row(r);
        for (std::size_t c = 0; c < width; ++c) {
            px[c] = (row_bytes[c >> 3] >> (7 - (c & 7))) & 1;
        }
        scan.at += bytes_per_row;
    }
    if (!scan.done()) {
        throw FormatError(FormatErrorCode::malformed_payload, scan.at,
                          "trailing data after raster");
    }
    return image;
}

} // namespace

BitonalImage read_pbm(std::span<const std::uint8_t> bytes) {
    Scanner scan{bytes};
    if (bytes.size() < 2) {
        throw FormatError(FormatErrorCode::unsupported_magic, 0, "not a PBM file");
    }
    const char m0 = static_cast<char>(bytes[0]);
    const char m1 = static_cast<char>(bytes[1]);
    scan.at = 2;
    if (m0 == 'P' && m1 == '1') {
        return read_plain(scan);
    }
    if (m0 == 'P' && m1 == '4') {
        return read_raw(scan);
    }
    throw FormatError(FormatErrorCode::unsupported_magic, 0,
                      "expected P1 or P4, got '" + std::string{m0, m1} + "'");
}

std::vector<std::uint8_t> write_pbm(const BitonalImage& image) {
    const std::string header = "P4\n" + std::to_string(image.width()) + " " +
                               std::to_string(image.height()) + "\n";
    const std::size_t bytes_per_row = (image.width() + 7) / 8;
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(out.size() + image.height() * bytes_per_row);
    for (std::size_t r = 0; r < image.height(); ++r) {
        const std::uint8_t* px = image.row(r);
        for (std::size_t byte = 0; byte < bytes_per_row; ++byte) {
            std::uint8_t packed = 0;
            const std::size_t base = byte * 8;
            for (std::size_t bit = 0; bit < 8 && base + bit < image.width(); ++bit) {
                packed |= static_cast<std::uint8_t>(px[base + bit] << (7 - bit));
            }
            out.push_back(packed);
        }
    }
    return out;
}

} // namespace rldoc
