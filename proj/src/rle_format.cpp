#include "rldoc/rle_format.hpp"

#include <cstdint>
#include <limits>

#include "rldoc/error.hpp"

namespace rldoc {

namespace {

constexpr std::string_view kMagic = "RLE1";
constexpr std::size_t kMaxDimension = std::size_t{1} << 31;

struct LineReader {
    std::string_view text;
    std::size_t at = 0;

    bool done() const { return at >= text.size(); }

    // Returns the next line without its LF. The final line may be unterminated.
    std::string_view next_line(std::size_t* line_offset) {
        *line_offset = at;
        const std::size_t nl = text.find('\n', at);
        if (nl == std::string_view::npos) {
            std::string_view line = text.substr(at);
            at = text.size();
            return line;
        }
        std::string_view line = text.substr(at, nl - at);
        at = nl + 1;
        return line;
    }
};

// Strict decimal: digits only, no sign, no leading '+', value fits uint64.
bool parse_u64(std::string_view token, std::uint64_t* out) {
    if (token.empty()) {
        return false;
    }
    std::uint64_t value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9') {
            return false;
        }
        if (value > (std::numeric_limits<std::uint64_t>::max() - (ch - '0')) / 10) {
            return false;
        }
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    *out = value;
    return true;
}

} // namespace

RleDocument read_rle_file(std::string_view text) {
    LineReader reader{text};
    std::size_t offset = 0;

    if (reader.done()) {
        throw FormatError(FormatErrorCode::bad_magic, 0, "empty input");
    }
    const std::string_view magic = reader.next_line(&offset);
    if (magic != kMagic) {
        throw FormatError(FormatErrorCode::bad_magic, offset,
                          "expected '" + std::string(kMagic) + "'");
    }

    if (reader.done()) {
        throw FormatError(FormatErrorCode::malformed_header, reader.at,
                          "missing dimension line");
    }
    const std::string_view dims = reader.next_line(&offset);
    const std::size_t space = dims.find(' ');
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    if (space == std::string_view::npos || !parse_u64(dims.substr(0, space), &m) ||
        !parse_u64(dims.substr(space + 1), &n)) {
        throw FormatError(FormatErrorCode::malformed_header, offset,
                          "expected '<m> <n>'");
    }
    if (m == 0 || n == 0) {
        throw FormatError(FormatErrorCode::dimension_mismatch, offset,
                          "dimensions must be at least 1");
    }
    if (m > kMaxDimension || n > kMaxDimension) {
        throw FormatError(FormatErrorCode::malformed_header, offset, "dimensions too large");
    }

    RleDocument doc;
    doc.height = static_cast<std::size_t>(m);
    doc.width = static_cast<std::size_t>(n);
    doc.rows.resize(doc.height);

    for (std::size_t r = 0; r < doc.height; ++r) {
        if (reader.done()) {
            throw FormatError(FormatErrorCode::truncated_payload, reader.at,
                              "row " + std::to_string(r + 1) + " missing");
        }
        const std::string_view line = reader.next_line(&offset);
        RunRow& runs = doc.rows[r];
        std::uint64_t sum = 0;
        std::size_t start = 0;
        while (true) {
            const std::size_t end = line.find(' ', start);
            const std::string_view token =
                line.substr(start, end == std::string_view::npos ? end : end - start);
            std::uint64_t run = 0;
            if (!parse_u64(token, &run) || run > n) {
                throw FormatError(FormatErrorCode::malformed_payload, offset + start,
                                  "bad run length in row " + std::to_string(r + 1));
            }
            if (!runs.empty() && run == 0) {
                throw FormatError(FormatErrorCode::non_alternating_zero, offset + start,
                                  "zero run at position " + std::to_string(runs.size() + 1) +
                                      " of row " + std::to_string(r + 1));
            }
            runs.push_back(static_cast<RunLength>(run));
            sum += run;
            if (end == std::string_view::npos) {
                break;
            }
            start = end + 1;
        }
        if (sum != n) {
            throw FormatError(FormatErrorCode::invalid_run_sum, offset,
                              "row " + std::to_string(r + 1) + " sums to " +
                                  std::to_string(sum) + ", expected " + std::to_string(n));
        }
    }

    if (!reader.done()) {
        throw FormatError(FormatErrorCode::malformed_payload, reader.at,
                          "trailing data after row " + std::to_string(doc.height));
    }
    return doc;
}

std::string write_rle_file(const RleDocument& doc) {
    validate(doc);
    std::string out(kMagic);
    out += '\n';
    out += std::to_string(doc.height);
    out += ' ';
    out += std::to_string(doc.width);
    out += '\n';
    for (const RunRow& runs : doc.rows) {
        for (std::size_t i = 0; i < runs.size(); ++i) {
            if (i > 0) {
                out += ' ';
            }
            out += std::to_string(runs[i]);
        }
        out += '\n';
    }
    return out;
}

} // namespace rldoc
