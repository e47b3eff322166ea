#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rldoc/bench.hpp"
#include "rldoc/codec.hpp"
#include "rldoc/entropy.hpp"
#include "rldoc/error.hpp"
#include "rldoc/histograms.hpp"
#include "rldoc/pbm.hpp"
#include "rldoc/profiles.hpp"
#include "rldoc/rle_format.hpp"
#include "rldoc/serialize.hpp"
#include "rldoc/verify.hpp"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        if (std::cin.bad()) {
            throw rldoc::IoError("failed to read standard input");
        }
        return std::move(buffer).str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw rldoc::IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw rldoc::IoError("failed while reading '" + path + "'");
    }
    return std::move(buffer).str();
}

void write_output(const std::string& path, std::string_view data) {
    if (path == "-") {
        std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
        std::cout.flush();
        if (!std::cout) {
            throw rldoc::IoError("failed to write standard output");
        }
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw rldoc::IoError("cannot open '" + path + "' for writing");
    }
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) {
        throw rldoc::IoError("failed while writing '" + path + "'");
    }
}

// Commands never write to their input paths.
bool same_file(const std::string& input, const std::string& output) {
    if (input == "-" || output == "-") {
        return false;
    }
    if (input == output) {
        return true;
    }
    std::error_code ec;
    return fs::exists(input, ec) && fs::exists(output, ec) && fs::equivalent(input, output, ec);
}

rldoc::RleDocument load_rle(const std::string& path) {
    return rldoc::read_rle_file(read_input(path));
}

int cmd_encode(const std::string& input, const std::string& output) {
    if (same_file(input, output)) {
        std::cerr << "rldoc: output path equals input path\n";
        return kExitUsage;
    }
    const std::string bytes = read_input(input);
    const rldoc::BitonalImage image = rldoc::read_pbm(
        {reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()});
    write_output(output, rldoc::write_rle_file(rldoc::encode_rle(image)));
    return kExitOk;
}

int cmd_decode(const std::string& input, const std::string& output) {
    if (same_file(input, output)) {
        std::cerr << "rldoc: output path equals input path\n";
        return kExitUsage;
    }
    const rldoc::BitonalImage image = rldoc::decode_rle(load_rle(input));
    const std::vector<std::uint8_t> bytes = rldoc::write_pbm(image);
    write_output(output, {reinterpret_cast<const char*>(bytes.data()), bytes.size()});
    return kExitOk;
}

struct FeatureFlags {
    std::string name;
    double log_base = 2.0;
    std::size_t bins = 9;
    std::string kind = "combined";
    std::string format = "csv";
};

rldoc::RunHistogram histogram_by_kind(const rldoc::RleDocument& doc, const std::string& kind) {
    if (kind == "black") {
        return rldoc::black_run_histogram(doc);
    }
    if (kind == "white") {
        return rldoc::white_run_histogram(doc);
    }
    return rldoc::combined_run_histogram(doc);
}

int cmd_features(const std::string& input, const std::string& output, const FeatureFlags& flags) {
    if (same_file(input, output)) {
        std::cerr << "rldoc: output path equals input path\n";
        return kExitUsage;
    }
    const rldoc::RleDocument doc = load_rle(input);
    const bool json = flags.format == "json";

    std::string text;
    if (flags.name == "row-profile") {
        const rldoc::Profile p = rldoc::row_profile(doc);
        text = json ? rldoc::to_json(p) : rldoc::to_csv(p);
    } else if (flags.name == "column-profile") {
        const rldoc::Profile p = rldoc::column_profile(doc);
        text = json ? rldoc::to_json(p) : rldoc::to_csv(p);
    } else if (flags.name == "black-hist") {
        const rldoc::RunHistogram h = rldoc::black_run_histogram(doc);
        text = json ? rldoc::to_json(h) : rldoc::to_csv(h);
    } else if (flags.name == "white-hist") {
        const rldoc::RunHistogram h = rldoc::white_run_histogram(doc);
        text = json ? rldoc::to_json(h) : rldoc::to_csv(h);
    } else if (flags.name == "combined-hist") {
        const rldoc::RunHistogram h = rldoc::combined_run_histogram(doc);
        text = json ? rldoc::to_json(h) : rldoc::to_csv(h);
    } else if (flags.name == "log-hist") {
        const rldoc::LogHistogram h =
            rldoc::log_scale_histogram(histogram_by_kind(doc, flags.kind), flags.bins);
        text = json ? rldoc::to_json(h) : rldoc::to_csv(h);
    } else if (flags.name == "blank-lines") {
        const std::size_t count = rldoc::blank_line_count(doc);
        text = json ? rldoc::blank_lines_json(count) : rldoc::blank_lines_csv(count);
    } else {
        rldoc::EntropyResult result;
        if (flags.name == "ceq-h") {
            result = rldoc::ceq_horizontal(doc, flags.log_base);
        } else if (flags.name == "seq-h") {
            result = rldoc::seq_horizontal(doc, flags.log_base);
        } else if (flags.name == "ceq-v") {
            result = rldoc::ceq_vertical(doc, flags.log_base);
        } else {
            result = rldoc::seq_vertical(doc, flags.log_base);
        }
        text = json ? rldoc::to_json(result) : rldoc::to_csv(result);
    }
    write_output(output, text);
    return kExitOk;
}

int cmd_verify(const std::string& input, double log_base) {
    const rldoc::RleDocument doc = load_rle(input);
    const rldoc::VerifyReport report = rldoc::verify_document(doc, log_base);
    for (const rldoc::FeatureCheck& check : report.checks) {
        std::cout << std::left << std::setw(20) << check.feature
                  << (check.passed ? "PASS" : "FAIL");
        if (!check.detail.empty()) {
            std::cout << "  " << check.detail;
        }
        std::cout << '\n';
    }
    return report.all_passed() ? kExitOk : kExitMismatch;
}

struct BenchFlags {
    std::vector<std::string> features;
    std::size_t reps = 5;
    double log_base = 2.0;
    std::string format = "csv";
    bool parallel = false;
};

int cmd_bench(const std::string& corpus_dir, const BenchFlags& flags) {
    std::error_code ec;
    if (!fs::is_directory(corpus_dir, ec)) {
        std::cerr << "rldoc: '" << corpus_dir << "' is not a directory\n";
        return kExitIo;
    }
    std::vector<fs::path> paths;
    for (const fs::directory_entry& entry : fs::directory_iterator(corpus_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".rle") {
            paths.push_back(entry.path());
        }
    }
    if (paths.empty()) {
        std::cerr << "rldoc: no .rle files in '" << corpus_dir << "'\n";
        return kExitIo;
    }
    std::sort(paths.begin(), paths.end());

    std::vector<rldoc::RleDocument> corpus;
    corpus.reserve(paths.size());
    for (const fs::path& path : paths) {
        try {
            corpus.push_back(load_rle(path.string()));
        } catch (const rldoc::FormatError& e) {
            std::cerr << "rldoc: " << path.string() << ": " << e.what() << '\n';
            return kExitIo;
        }
    }

    std::vector<rldoc::BenchFeature> features;
    for (const std::string& name : flags.features) {
        const auto feature = rldoc::parse_bench_feature(name);
        if (!feature) {
            std::cerr << "rldoc: unknown bench feature '" << name << "'\n";
            return kExitUsage;
        }
        features.push_back(*feature);
    }
    if (features.empty()) {
        const auto all = rldoc::all_bench_features();
        features.assign(all.begin(), all.end());
    }

    rldoc::BenchOptions options;
    options.repetitions = flags.reps;
    options.log_base = flags.log_base;
    options.parallel = flags.parallel;
    const std::vector<rldoc::BenchReport> reports =
        rldoc::run_benchmark(corpus, features, options);

    // The CSV schema has no room for a mode column, so the throughput-mode
    // label goes to stderr there; the JSON report carries "parallel" itself.
    if (flags.parallel && flags.format != "json") {
        std::cerr << "rldoc: parallel throughput mode: wall-clock timings over "
                  << std::thread::hardware_concurrency() << " threads\n";
    }
    write_output("-", flags.format == "json" ? rldoc::to_json(reports) : rldoc::to_csv(reports));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feature extraction for run-length compressed bitonal document images"};
    app.require_subcommand(1);

    const CLI::Validator log_base_ok(
        [](std::string& value) -> std::string {
            double base = 0.0;
            try {
                base = std::stod(value);
            } catch (...) {
                return "'" + value + "' is not a number";
            }
            if (!(base > 0.0) || base == 1.0) {
                return "log base must be positive and not 1";
            }
            return {};
        },
        "LOGBASE");

    std::string input = "-";
    std::string output = "-";

    CLI::App* encode = app.add_subcommand("encode", "Convert a PBM image (P1 or P4) to RLE1");
    encode->add_option("input", input, "PBM file, or - for stdin");
    encode->add_option("output", output, "RLE1 file, or - for stdout");

    CLI::App* decode = app.add_subcommand("decode", "Convert an RLE1 file back to PBM (P4)");
    decode->add_option("input", input, "RLE1 file, or - for stdin");
    decode->add_option("output", output, "PBM file, or - for stdout");

    FeatureFlags feature_flags;
    CLI::App* features = app.add_subcommand("features", "Extract one feature from an RLE1 file");
    features->add_option("input", input, "RLE1 file, or - for stdin");
    features->add_option("output", output, "Report file, or - for stdout");
    features
        ->add_option("--feature", feature_flags.name, "Feature to extract")
        ->required()
        ->check(CLI::IsMember({"row-profile", "column-profile", "black-hist", "white-hist",
                               "combined-hist", "log-hist", "blank-lines", "ceq-h", "seq-h",
                               "ceq-v", "seq-v"}));
    features->add_option("--log-base", feature_flags.log_base, "Entropy log base")
        ->envname("RLDOC_LOG_BASE")
        ->check(log_base_ok);
    features->add_option("--bins", feature_flags.bins, "Bin count for log-hist")
        ->check(CLI::Range(std::size_t{2}, std::size_t{33}));
    features->add_option("--kind", feature_flags.kind, "Histogram rebinned by log-hist")
        ->check(CLI::IsMember({"black", "white", "combined"}));
    features->add_option("--format", feature_flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    double verify_log_base = 2.0;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check every feature against the decoded bitmap (PASS/FAIL table)");
    verify->add_option("input", input, "RLE1 file, or - for stdin");
    verify->add_option("--log-base", verify_log_base, "Entropy log base")
        ->envname("RLDOC_LOG_BASE")
        ->check(log_base_ok);

    BenchFlags bench_flags;
    std::string corpus_dir;
    CLI::App* bench = app.add_subcommand(
        "bench", "Time compressed-domain vs decode-then-scan extraction over a corpus");
    bench->add_option("corpus", corpus_dir, "Directory of .rle files")->required();
    bench
        ->add_option("--features", bench_flags.features,
                     "Comma-separated list: row-profile, column-profile, run-histogram, "
                     "ceq-h, seq-h (default: all)")
        ->delimiter(',');
    bench->add_option("--reps", bench_flags.reps, "Repetitions (best-of aggregation)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
    bench->add_option("--log-base", bench_flags.log_base, "Entropy log base")
        ->envname("RLDOC_LOG_BASE")
        ->check(log_base_ok);
    bench->add_option("--format", bench_flags.format, "Report format")
        ->check(CLI::IsMember({"csv", "json"}));
    bench->add_flag("--parallel", bench_flags.parallel,
                    "Spread the corpus over hardware threads (throughput mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (encode->parsed()) {
            return cmd_encode(input, output);
        }
        if (decode->parsed()) {
            return cmd_decode(input, output);
        }
        if (features->parsed()) {
            return cmd_features(input, output, feature_flags);
        }
        if (verify->parsed()) {
            return cmd_verify(input, verify_log_base);
        }
        return cmd_bench(corpus_dir, bench_flags);
    } catch (const rldoc::MismatchError& e) {
        std::cerr << "rldoc: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const rldoc::FormatError& e) {
        std::cerr << "rldoc: " << e.what() << '\n';
        return kExitIo;
    } catch (const rldoc::IoError& e) {
        std::cerr << "rldoc: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "rldoc: " << e.what() << '\n';
        return kExitUsage;
    }
}
