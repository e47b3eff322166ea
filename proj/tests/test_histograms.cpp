#include <doctest.h>

#include <random>
#include <stdexcept>

#include "rldoc/histograms.hpp"

#include "golden.hpp"
#include "random_images.hpp"

using namespace rldoc;

namespace {

std::uint64_t pixel_mass(const RunHistogram& hist) {
    std::uint64_t mass = 0;
    for (const auto& [length, frequency] : hist.counts) {
        mass += std::uint64_t{length} * frequency;
    }
    return mass;
}

std::uint64_t frequency_total(const RunHistogram& hist) {
    std::uint64_t total = 0;
    for (const auto& [length, frequency] : hist.counts) {
        total += frequency;
    }
    return total;
}

} // namespace

TEST_CASE("golden histograms from both paths") {
    const RleDocument doc = golden::document();
    const BitonalImage image = golden::image();

    const RunHistogram black = black_run_histogram(doc);
    CHECK(black.kind == RunKind::black);
    CHECK(black.counts == golden::black_histogram());
    CHECK(black_run_histogram(image).counts == golden::black_histogram());

    CHECK(white_run_histogram(doc).counts == golden::white_histogram());
    CHECK(white_run_histogram(image).counts == golden::white_histogram());

    const RunHistogram combined = combined_run_histogram(doc);
    CHECK(combined.kind == RunKind::combined);
    CHECK(combined.counts == golden::combined_histogram());
    CHECK(combined_run_histogram(image).counts == golden::combined_histogram());
}

TEST_CASE("golden histogram masses") {
    const RleDocument doc = golden::document();
    CHECK(pixel_mass(black_run_histogram(doc)) == golden::kTotalBlack);
    CHECK(pixel_mass(white_run_histogram(doc)) ==
          golden::kHeight * golden::kWidth - golden::kTotalBlack);
    CHECK(pixel_mass(combined_run_histogram(doc)) == golden::kHeight * golden::kWidth);
}

TEST_CASE("structural zero runs are never counted") {
    // Both rows start black: the leading zero encodes phase, not a run.
    const RleDocument doc{2, 4, {{0, 4}, {0, 1, 2, 1}}};
    const RunHistogram white = white_run_histogram(doc);
    CHECK(white.counts == std::map<RunLength, std::uint64_t>{{2, 1}});
    const RunHistogram black = black_run_histogram(doc);
    CHECK(black.counts == std::map<RunLength, std::uint64_t>{{1, 2}, {4, 1}});
}

TEST_CASE("combined equals the pointwise sum") {
    std::mt19937_64 rng(7301);
    for (int i = 0; i < 100; ++i) {
        const RleDocument doc = testgen::random_document(rng);
        const RunHistogram black = black_run_histogram(doc);
        const RunHistogram white = white_run_histogram(doc);
        RunHistogram expected{RunKind::combined, black.counts};
        for (const auto& [length, frequency] : white.counts) {
            expected.counts[length] += frequency;
        }
        CAPTURE(i);
        CHECK(combined_run_histogram(doc).counts == expected.counts);
    }
}

TEST_CASE("histograms agree across paths on random images") {
    std::mt19937_64 rng(7302);
    for (int i = 0; i < 300; ++i) {
        const BitonalImage image = testgen::random_image(rng);
        const RleDocument doc = encode_rle(image);
        CAPTURE(i);
        CHECK(black_run_histogram(doc) == black_run_histogram(image));
        CHECK(white_run_histogram(doc) == white_run_histogram(image));
        CHECK(combined_run_histogram(doc) == combined_run_histogram(image));
    }
}

TEST_CASE("log-scale bins follow the dyadic ladder") {
    RunHistogram hist{RunKind::combined, {{1, 4}, {2, 1}, {4, 2}, {100, 1}}};
    const LogHistogram log_hist = log_scale_histogram(hist);
    REQUIRE(log_hist.bins.size() == 9);

    const std::pair<RunLength, RunLength> closed[] = {
        {1, 1}, {2, 2}, {3, 4}, {5, 8}, {9, 16}, {17, 32}, {33, 64}, {65, 128},
    };
    for (std::size_t i = 0; i < 8; ++i) {
        CAPTURE(i);
        CHECK(log_hist.bins[i].lower == closed[i].first);
        REQUIRE(log_hist.bins[i].upper.has_value());
        CHECK(*log_hist.bins[i].upper == closed[i].second);
    }
    CHECK(log_hist.bins[8].lower == 129);
    CHECK_FALSE(log_hist.bins[8].upper.has_value());

    const std::uint64_t expected[] = {4, 1, 2, 0, 0, 0, 0, 1, 0};
    for (std::size_t i = 0; i < 9; ++i) {
        CAPTURE(i);
        CHECK(log_hist.bins[i].frequency == expected[i]);
    }
}

TEST_CASE("log-scale rebinning conserves frequencies") {
    std::mt19937_64 rng(7303);
    for (int i = 0; i < 50; ++i) {
        const RunHistogram hist = combined_run_histogram(testgen::random_document(rng, 200));
        const LogHistogram log_hist = log_scale_histogram(hist);
        std::uint64_t binned = 0;
        for (const LogBin& bin : log_hist.bins) {
            binned += bin.frequency;
        }
        CAPTURE(i);
        CHECK(binned == frequency_total(hist));
    }
}

TEST_CASE("log-scale bin count is validated") {
    const RunHistogram hist = combined_run_histogram(golden::document());
    CHECK_THROWS_AS(log_scale_histogram(hist, 0), std::invalid_argument);
    CHECK_THROWS_AS(log_scale_histogram(hist, 1), std::invalid_argument);
    CHECK_THROWS_AS(log_scale_histogram(hist, 34), std::invalid_argument);
    CHECK(log_scale_histogram(hist, 2).bins.size() == 2);
    CHECK(log_scale_histogram(hist, 33).bins.size() == 33);
}

TEST_CASE("two-bin histogram splits at one") {
    RunHistogram hist{RunKind::combined, {{1, 5}, {2, 3}, {9, 1}}};
    const LogHistogram log_hist = log_scale_histogram(hist, 2);
    CHECK(log_hist.bins[0].frequency == 5);
    CHECK(log_hist.bins[1].lower == 2);
    CHECK_FALSE(log_hist.bins[1].upper.has_value());
    CHECK(log_hist.bins[1].frequency == 4);
}

TEST_CASE("blank line counting") {
    CHECK(blank_line_count(golden::document()) == golden::kBlankLines);
    CHECK(blank_line_count(golden::image()) == golden::kBlankLines);
    CHECK(blank_line_count(encode_rle(BitonalImage(7, 3))) == 7);
    CHECK(blank_line_count(encode_rle(BitonalImage(7, 3, 1))) == 0);

    std::mt19937_64 rng(7304);
    for (int i = 0; i < 100; ++i) {
        const BitonalImage image = testgen::random_image(rng);
        CAPTURE(i);
        CHECK(blank_line_count(encode_rle(image)) == blank_line_count(image));
    }
}
