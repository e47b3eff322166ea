#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rldoc/bench.hpp"
#include "rldoc/entropy.hpp"
#include "rldoc/histograms.hpp"
#include "rldoc/profiles.hpp"

namespace rldoc {

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

const char* to_string(Quantifier q);
const char* to_string(EntropyAxis axis);
const char* to_string(RunKind kind);

// All text outputs use LF line endings and 1-based line/column indices.
std::string to_csv(const Profile& profile);              // index,count
std::string to_csv(const RunHistogram& hist);            // run_length,frequency
std::string to_csv(const LogHistogram& hist);            // bin_lower,bin_upper,frequency ("inf" open edge)
std::string to_csv(const EntropyResult& result);         // line_index,positive_part,negative_part,total
std::string to_csv(std::span<const BenchReport> reports);// feature,T2,D,T1,time_saved_percent,repetitions,corpus_size
std::string blank_lines_csv(std::size_t count);

std::string to_json(const Profile& profile);
std::string to_json(const RunHistogram& hist);
std::string to_json(const LogHistogram& hist);
std::string to_json(const EntropyResult& result); // summary: quantifier, axis, log_base, document_total
std::string to_json(std::span<const BenchReport> reports); // with per-document breakdown
std::string blank_lines_json(std::size_t count);

// Parses a bench CSV back; time_saved_percent is recomputed from the loaded
// T1/T2 fields rather than trusted.
std::vector<BenchReport> read_bench_csv(std::string_view text);

} // namespace rldoc
