#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rldoc/codec.hpp"

namespace rldoc {

// The features timed along both extraction paths (compressed vs
// decode-then-scan). run_histogram covers the black, white and combined
// tallies together, matching how the report rows are grouped.
enum class BenchFeature {
    row_profile,
    column_profile,
    run_histogram,
    ceq_horizontal,
    seq_horizontal,
};

const char* to_string(BenchFeature feature);
std::optional<BenchFeature> parse_bench_feature(std::string_view name);
std::span<const BenchFeature> all_bench_features();

// ((T1 - T2) / T1) * 100. Negative when the compressed path is slower.
// Throws std::invalid_argument when t1_seconds <= 0.
double time_saved_percent(double t1_seconds, double t2_seconds);

// Wall times for one corpus document, from the final repetition.
struct DocumentTiming {
    double t2_seconds = 0.0;      // compressed-domain extraction
    double decode_seconds = 0.0;  // decode_rle
    double extract_seconds = 0.0; // bitmap-domain extraction
};

struct BenchReport {
    std::string feature;
    double t2_seconds = 0.0; // compressed-domain extraction, whole corpus
    double d_seconds = 0.0;  // decompression alone
    double t1_seconds = 0.0; // decompression + bitmap-domain extraction
    double saved_percent = 0.0; // derived: time_saved_percent(t1, t2)
    std::size_t repetitions = 0;
    std::size_t corpus_size = 0;
    bool parallel = false;
    std::vector<DocumentTiming> per_document;
};

struct BenchOptions {
    std::size_t repetitions = 5; // best-of aggregation, warm-up pass excluded
    double log_base = 2.0;       // for the entropy features
    bool parallel = false;       // throughput mode: corpus spread over threads
};

// Times each selected feature over the corpus along both paths. Before any
// timing, asserts the two paths agree on every document; a disagreement
// throws MismatchError. An empty corpus throws std::invalid_argument.
std::vector<BenchReport> run_benchmark(const std::vector<RleDocument>& corpus,
                                       std::span<const BenchFeature> features,
                                       const BenchOptions& options = {});

} // namespace rldoc
