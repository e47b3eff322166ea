#include "rldoc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>

#include "rldoc/entropy.hpp"
#include "rldoc/error.hpp"
#include "rldoc/histograms.hpp"
#include "rldoc/profiles.hpp"

namespace rldoc {

const char* to_string(BenchFeature feature) {
    switch (feature) {
    case BenchFeature::row_profile: return "row-profile";
    case BenchFeature::column_profile: return "column-profile";
    case BenchFeature::run_histogram: return "run-histogram";
    case BenchFeature::ceq_horizontal: return "ceq-h";
    case BenchFeature::seq_horizontal: return "seq-h";
    }
    return "unknown";
}

std::span<const BenchFeature> all_bench_features() {
    static constexpr BenchFeature kAll[] = {
        BenchFeature::row_profile,   BenchFeature::column_profile,
        BenchFeature::run_histogram, BenchFeature::ceq_horizontal,
        BenchFeature::seq_horizontal,
    };
    return kAll;
}

std::optional<BenchFeature> parse_bench_feature(std::string_view name) {
    for (BenchFeature feature : all_bench_features()) {
        if (name == to_string(feature)) {
            return feature;
        }
    }
    return std::nullopt;
}

double time_saved_percent(double t1_seconds, double t2_seconds) {
    if (!(t1_seconds > 0.0)) {
        throw std::invalid_argument("time_saved_percent: T1 must be positive");
    }
    return (t1_seconds - t2_seconds) / t1_seconds * 100.0;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// The extractors live in other translation units, so the timed calls cannot
// be elided; the sink additionally keeps their cheap result summaries alive.
std::atomic<std::uint64_t> bench_sink{0};

void consume(std::uint64_t value) { bench_sink.fetch_add(value, std::memory_order_relaxed); }

std::uint64_t extract_compressed(BenchFeature feature, const RleDocument& doc, double log_base) {
    switch (feature) {
    case BenchFeature::row_profile:
        return row_profile(doc).values.size();
    case BenchFeature::column_profile:
        return column_profile(doc).values.size();
    case BenchFeature::run_histogram:
        return combined_run_histogram(doc).counts.size();
    case BenchFeature::ceq_horizontal:
        return ceq_horizontal(doc, log_base).per_line.size();
    case BenchFeature::seq_horizontal:
        return seq_horizontal(doc, log_base).per_line.size();
    }
    return 0;
}

std::uint64_t extract_bitmap(BenchFeature feature, const BitonalImage& image, double log_base) {
    switch (feature) {
    case BenchFeature::row_profile:
        return row_profile(image).values.size();
    case BenchFeature::column_profile:
        return column_profile(image).values.size();
    case BenchFeature::run_histogram:
        return combined_run_histogram(image).counts.size();
    case BenchFeature::ceq_horizontal:
        return ceq_horizontal(image, log_base).per_line.size();
    case BenchFeature::seq_horizontal:
        return seq_horizontal(image, log_base).per_line.size();
    }
    return 0;
}

bool entropy_equal(const EntropyResult& a, const EntropyResult& b) {
    return a.per_line == b.per_line && a.document_total == b.document_total;
}

// Compares one document's feature along both paths. The two paths perform
// the same arithmetic in the same order, so even the float features must
// match exactly; any difference is a bug worth aborting for.
void gate_document(BenchFeature feature, const RleDocument& doc, const BitonalImage& image,
                   double log_base, std::size_t index) {
    const auto fail = [&] {
        throw MismatchError(to_string(feature),
                            "paths disagree on corpus document " + std::to_string(index));
    };
    switch (feature) {
    case BenchFeature::row_profile:
        if (row_profile(doc) != row_profile(image)) fail();
        return;
    case BenchFeature::column_profile:
        if (column_profile(doc) != column_profile(image)) fail();
        return;
    case BenchFeature::run_histogram:
        if (black_run_histogram(doc) != black_run_histogram(image) ||
            white_run_histogram(doc) != white_run_histogram(image) ||
            combined_run_histogram(doc) != combined_run_histogram(image)) {
            fail();
        }
        return;
    case BenchFeature::ceq_horizontal:
        if (!entropy_equal(ceq_horizontal(doc, log_base), ceq_horizontal(image, log_base))) fail();
        return;
    case BenchFeature::seq_horizontal:
        if (!entropy_equal(seq_horizontal(doc, log_base), seq_horizontal(image, log_base))) fail();
        return;
    }
}

// Splits [0, count) into contiguous slices, one worker thread per slice.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
    const unsigned hw = std::thread::hardware_concurrency();
    const std::size_t workers = std::min<std::size_t>(hw == 0 ? 1 : hw, count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        threads.emplace_back([&body, begin, end] {
            for (std::size_t i = begin; i < end; ++i) {
                body(i);
            }
        });
    }
    for (std::thread& t : threads) {
        t.join();
    }
}

// One compressed-domain pass over the corpus; returns the summed per-document
// wall time (serial) and records per-document times when asked.
double compressed_pass(BenchFeature feature, const std::vector<RleDocument>& corpus,
                       double log_base, std::vector<DocumentTiming>* per_document) {
    double total = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto start = Clock::now();
        consume(extract_compressed(feature, corpus[i], log_base));
        const double dt = elapsed_seconds(start);
        total += dt;
        if (per_document) {
            (*per_document)[i].t2_seconds = dt;
        }
    }
    return total;
}

struct BitmapPassTimes {
    double decode_total = 0.0;
    double extract_total = 0.0;
};

// One decode-then-extract pass. Every document is decoded afresh so the
// decompression cost lands inside the measurement, exactly what T1 charges.
BitmapPassTimes bitmap_pass(BenchFeature feature, const std::vector<RleDocument>& corpus,
                            double log_base, std::vector<DocumentTiming>* per_document) {
    BitmapPassTimes times;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto start = Clock::now();
        const BitonalImage image = decode_rle(corpus[i]);
        const double decode_dt = elapsed_seconds(start);
        const auto mid = Clock::now();
        consume(extract_bitmap(feature, image, log_base));
        const double extract_dt = elapsed_seconds(mid);
        times.decode_total += decode_dt;
        times.extract_total += extract_dt;
        if (per_document) {
            (*per_document)[i].decode_seconds = decode_dt;
            (*per_document)[i].extract_seconds = extract_dt;
        }
    }
    return times;
}

// Parallel (throughput) variants: the corpus is spread over hardware threads
// and the number reported is the wall time of the whole pass.
double compressed_pass_parallel(BenchFeature feature, const std::vector<RleDocument>& corpus,
                                double log_base, std::vector<DocumentTiming>* per_document) {
    const auto start = Clock::now();
    parallel_for(corpus.size(), [&](std::size_t i) {
        const auto doc_start = Clock::now();
        consume(extract_compressed(feature, corpus[i], log_base));
        if (per_document) {
            (*per_document)[i].t2_seconds = elapsed_seconds(doc_start);
        }
    });
    return elapsed_seconds(start);
}

BitmapPassTimes bitmap_pass_parallel(BenchFeature feature, const std::vector<RleDocument>& corpus,
                                     double log_base, std::vector<DocumentTiming>* per_document) {
    // Wall time of parallel decoding alone, then of decode-plus-extract; the
    // extract share is their difference, so T1 = D + extract still holds.
    const auto decode_start = Clock::now();
    parallel_for(corpus.size(), [&](std::size_t i) {
        consume(decode_rle(corpus[i]).pixels().size());
    });
    const double decode_wall = elapsed_seconds(decode_start);

    const auto full_start = Clock::now();
    parallel_for(corpus.size(), [&](std::size_t i) {
        const auto doc_start = Clock::now();
        const BitonalImage image = decode_rle(corpus[i]);
        const double decode_dt = elapsed_seconds(doc_start);
        const auto mid = Clock::now();
        consume(extract_bitmap(feature, image, log_base));
        if (per_document) {
            (*per_document)[i].decode_seconds = decode_dt;
            (*per_document)[i].extract_seconds = elapsed_seconds(mid);
        }
    });
    const double full_wall = elapsed_seconds(full_start);

    BitmapPassTimes times;
    times.decode_total = std::min(decode_wall, full_wall);
    times.extract_total = full_wall - times.decode_total;
    return times;
}

} // namespace

std::vector<BenchReport> run_benchmark(const std::vector<RleDocument>& corpus,
                                       std::span<const BenchFeature> features,
                                       const BenchOptions& options) {
    if (corpus.empty()) {
        throw std::invalid_argument("run_benchmark: corpus is empty");
    }
    if (options.repetitions == 0) {
        throw std::invalid_argument("run_benchmark: repetitions must be >= 1");
    }

    // Correctness gate before any timing.
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const BitonalImage image = decode_rle(corpus[i]);
        for (BenchFeature feature : features) {
            gate_document(feature, corpus[i], image, options.log_base, i);
        }
    }

    std::vector<BenchReport> reports;
    reports.reserve(features.size());
    for (BenchFeature feature : features) {
        BenchReport report;
        report.feature = to_string(feature);
        report.repetitions = options.repetitions;
        report.corpus_size = corpus.size();
        report.parallel = options.parallel;
        report.per_document.assign(corpus.size(), {});

        const auto run_compressed = [&](std::vector<DocumentTiming>* slots) {
            return options.parallel
                       ? compressed_pass_parallel(feature, corpus, options.log_base, slots)
                       : compressed_pass(feature, corpus, options.log_base, slots);
        };
        const auto run_bitmap = [&](std::vector<DocumentTiming>* slots) {
            return options.parallel ? bitmap_pass_parallel(feature, corpus, options.log_base, slots)
                                    : bitmap_pass(feature, corpus, options.log_base, slots);
        };

        // Warm-up pass, excluded from aggregation.
        run_compressed(nullptr);
        run_bitmap(nullptr);

        double best_t2 = std::numeric_limits<double>::infinity();
        double best_t1 = std::numeric_limits<double>::infinity();
        double d_of_best = 0.0;
        for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
            // Per-document numbers reflect the final repetition.
            const bool record = rep + 1 == options.repetitions;
            std::vector<DocumentTiming>* slots = record ? &report.per_document : nullptr;

            best_t2 = std::min(best_t2, run_compressed(slots));

            const BitmapPassTimes times = run_bitmap(slots);
            const double t1 = times.decode_total + times.extract_total;
            if (t1 < best_t1) {
                best_t1 = t1;
                d_of_best = times.decode_total;
            }
        }

        report.t2_seconds = best_t2;
        report.d_seconds = d_of_best;
        report.t1_seconds = best_t1;
        report.saved_percent = time_saved_percent(report.t1_seconds, report.t2_seconds);
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace rldoc
