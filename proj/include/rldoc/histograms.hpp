#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "rldoc/codec.hpp"

namespace rldoc {

enum class RunKind { black, white, combined };

// Frequency of each run length. Keys are >= 1: zero-length structural runs
// (the leading white placeholder of a black-starting row) encode phase, not
// pixels, and are never counted.
struct RunHistogram {
    RunKind kind = RunKind::combined;
    std::map<RunLength, std::uint64_t> counts;

    bool operator==(const RunHistogram&) const = default;
};

// Tallies of the even-position (black) and odd-position (white) runs; one
// pass each over the run lists. The BitonalImage overloads run-decompose the
// bitmap row by row and are the reference path.
RunHistogram black_run_histogram(const RleDocument& doc);
RunHistogram black_run_histogram(const BitonalImage& image);
RunHistogram white_run_histogram(const RleDocument& doc);
RunHistogram white_run_histogram(const BitonalImage& image);

// Pointwise sum of the black and white histograms.
RunHistogram combined_run_histogram(const RleDocument& doc);
RunHistogram combined_run_histogram(const BitonalImage& image);

struct LogBin {
    RunLength lower = 0;
    std::optional<RunLength> upper; // nullopt: open-ended final bin
    std::uint64_t frequency = 0;

    bool operator==(const LogBin&) const = default;
};

// Dyadic rebinning of a run histogram. Bins partition [1, inf).
struct LogHistogram {
    std::vector<LogBin> bins;

    bool operator==(const LogHistogram&) const = default;
};

// Bin 1 is [1,1], bin i is [2^(i-2)+1, 2^(i-1)] and the last bin is
// open-ended, so the default bin_count of 9 gives the ladder
// [1],[2],[3-4],[5-8],[9-16],[17-32],[33-64],[65-128],[129-).
// Throws std::invalid_argument when bin_count < 2 or when the bounds would
// not fit a RunLength (bin_count > 33).
LogHistogram log_scale_histogram(const RunHistogram& hist, std::size_t bin_count = 9);

// Number of all-white rows (single run equal to the column size).
std::size_t blank_line_count(const RleDocument& doc);
std::size_t blank_line_count(const BitonalImage& image);

} // namespace rldoc
