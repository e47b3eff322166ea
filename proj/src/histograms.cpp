#include "rldoc/histograms.hpp"

#include <stdexcept>

namespace rldoc {

namespace {

// Tallies runs of the requested parity. Black runs sit at even positions
// (odd 0-based indices); a zero-length first run is skipped.
RunHistogram tally_runs(const RleDocument& doc, bool black) {
    RunHistogram hist{black ? RunKind::black : RunKind::white, {}};
    const std::size_t parity = black ? 1 : 0;
    for (const RunRow& runs : doc.rows) {
        for (std::size_t i = parity; i < runs.size(); i += 2) {
            if (runs[i] > 0) {
                ++hist.counts[runs[i]];
            }
        }
    }
    return hist;
}

// Run-decomposes bitmap rows directly; independent of the run arithmetic.
RunHistogram tally_pixel_runs(const BitonalImage& image, bool black) {
    RunHistogram hist{black ? RunKind::black : RunKind::white, {}};
    const std::uint8_t wanted = black ? 1 : 0;
    for (std::size_t r = 0; r < image.height(); ++r) {
        const std::uint8_t* px = image.row(r);
        std::size_t c = 0;
        while (c < image.width()) {
            std::size_t end = c;
            while (end < image.width() && px[end] == px[c]) {
                ++end;
            }
            if (px[c] == wanted) {
                ++hist.counts[static_cast<RunLength>(end - c)];
            }
            c = end;
        }
    }
    return hist;
}

RunHistogram combine(RunHistogram black, const RunHistogram& white) {
    black.kind = RunKind::combined;
    for (const auto& [length, freq] : white.counts) {
        black.counts[length] += freq;
    }
    return black;
}

} // namespace

RunHistogram black_run_histogram(const RleDocument& doc) { return tally_runs(doc, true); }
RunHistogram black_run_histogram(const BitonalImage& image) { return tally_pixel_runs(image, true); }
RunHistogram white_run_histogram(const RleDocument& doc) { return tally_runs(doc, false); }
RunHistogram white_run_histogram(const BitonalImage& image) { return tally_pixel_runs(image, false); }

RunHistogram combined_run_histogram(const RleDocument& doc) {
    return combine(black_run_histogram(doc), white_run_histogram(doc));
}

RunHistogram combined_run_histogram(const BitonalImage& image) {
    return combine(black_run_histogram(image), white_run_histogram(image));
}

LogHistogram log_scale_histogram(const RunHistogram& hist, std::size_t bin_count) {
    if (bin_count < 2) {
        throw std::invalid_argument("log_scale_histogram needs at least 2 bins");
    }
    if (bin_count > 33) {
        // Bin 34 would need a lower bound of 2^32 + 1, past any run length.
        throw std::invalid_argument("log_scale_histogram supports at most 33 bins");
    }
    LogHistogram out;
    out.bins.reserve(bin_count);
    out.bins.push_back({1, 1, 0});
    for (std::size_t i = 2; i < bin_count; ++i) {
        const RunLength lower = static_cast<RunLength>((RunLength{1} << (i - 2)) + 1);
        const RunLength upper = static_cast<RunLength>(RunLength{1} << (i - 1));
        out.bins.push_back({lower, upper, 0});
    }
    out.bins.push_back(
        {static_cast<RunLength>((RunLength{1} << (bin_count - 2)) + 1), std::nullopt, 0});

    for (const auto& [length, freq] : hist.counts) {
        // Keys are >= 1, so the dyadic bin index is a bit-width lookup.
        std::size_t bin = 0;
        while (bin + 1 < bin_count && out.bins[bin].upper && length > *out.bins[bin].upper) {
            ++bin;
        }
        out.bins[bin].frequency += freq;
    }
    return out;
}

std::size_t blank_line_count(const RleDocument& doc) {
    std::size_t blank = 0;
    for (const RunRow& runs : doc.rows) {
        if (runs.size() == 1 && runs[0] == doc.width) {
            ++blank;
        }
    }
    return blank;
}

std::size_t blank_line_count(const BitonalImage& image) {
    std::size_t blank = 0;
    for (std::size_t r = 0; r < image.height(); ++r) {
        const std::uint8_t* px = image.row(r);
        bool any_black = false;
        for (std::size_t c = 0; c < image.width(); ++c) {
            any_black |= px[c] != 0;
        }
        blank += any_black ? 0 : 1;
    }
    return blank;
}

} // namespace rldoc
