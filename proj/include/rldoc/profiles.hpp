#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rldoc/codec.hpp"

namespace rldoc {

enum class ProfileAxis { row, column };

// Black-pixel counts along parallel lines: one value per row (length m) or
// per column (length n). Row values are <= n, column values <= m, and both
// profiles of a document sum to its total black pixel count.
struct Profile {
    ProfileAxis axis = ProfileAxis::row;
    std::vector<std::uint32_t> values;

    bool operator==(const Profile&) const = default;
};

// Compressed domain: sums the even-position (black) runs of each row in one
// pass. When runs_touched is given it counts every run read, for asserting
// the single-pass work bound (touched == total run count <= m * n').
Profile row_profile(const RleDocument& doc, std::size_t* runs_touched = nullptr);

// Uncompressed reference: per-row 1-bit counts over the bitmap.
Profile row_profile(const BitonalImage& image);

// Compressed domain: per-row cursors advanced one column at a time; the
// bitmap is never materialized (auxiliary state is O(m), not O(m*n)).
Profile column_profile(const RleDocument& doc);

// Uncompressed reference: per-column 1-bit counts over the bitmap.
Profile column_profile(const BitonalImage& image);

namespace detail {

// Read cursor over one run row: yields the row's pixels left to right.
// Canonical rows have at most one empty run (the first), so advancing past
// an exhausted run is a single step.
struct RunCursor {
    const RunLength* runs = nullptr;
    std::size_t index = 0;
    RunLength remaining = 0;
    std::uint8_t color = 0;

    explicit RunCursor(const RunRow& row) : runs(row.data()) {
        remaining = row.empty() ? 0 : runs[0];
    }

    std::uint8_t next() {
        while (remaining == 0) {
            ++index;
            remaining = runs[index];
            color = static_cast<std::uint8_t>(index & 1);
        }
        --remaining;
        return color;
    }
};

} // namespace detail

// Streams the document column by column ("virtual decompression"): visit is
// invoked once per column c = 0..n-1, in order, with that column's m bits
// top to bottom. The span is only valid during the call.
template <typename Visitor>
void stream_columns(const RleDocument& doc, Visitor&& visit) {
    std::vector<detail::RunCursor> cursors;
    cursors.reserve(doc.height);
    for (const RunRow& row : doc.rows) {
        cursors.emplace_back(row);
    }
    std::vector<std::uint8_t> column(doc.height);
    for (std::size_t c = 0; c < doc.width; ++c) {
        for (std::size_t r = 0; r < doc.height; ++r) {
            column[r] = cursors[r].next();
        }
        visit(c, std::span<const std::uint8_t>(column.data(), column.size()));
    }
}

} // namespace rldoc
