#include "rldoc/serialize.hpp"

#include <array>
#include <charconv>
#include <cstdint>

#include "rldoc/error.hpp"

namespace rldoc {

std::string format_double(double value) {
    std::array<char, 32> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), static_cast<std::size_t>(ptr - buf.data()));
}

const char* to_string(Quantifier q) {
    return q == Quantifier::ceq ? "ceq" : "seq";
}

const char* to_string(EntropyAxis axis) {
    return axis == EntropyAxis::horizontal ? "horizontal" : "vertical";
}

const char* to_string(RunKind kind) {
    switch (kind) {
    case RunKind::black: return "black";
    case RunKind::white: return "white";
    case RunKind::combined: return "combined";
    }
    return "unknown";
}

std::string to_csv(const Profile& profile) {
    std::string out = "index,count\n";
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        out += std::to_string(i + 1);
        out += ',';
        out += std::to_string(profile.values[i]);
        out += '\n';
    }
    return out;
}

std::string to_csv(const RunHistogram& hist) {
    std::string out = "run_length,frequency\n";
    for (const auto& [length, frequency] : hist.counts) {
        out += std::to_string(length);
        out += ',';
        out += std::to_string(frequency);
        out += '\n';
    }
    return out;
}

std::string to_csv(const LogHistogram& hist) {
    std::string out = "bin_lower,bin_upper,frequency\n";
    for (const LogBin& bin : hist.bins) {
        out += std::to_string(bin.lower);
        out += ',';
        out += bin.upper ? std::to_string(*bin.upper) : std::string("inf");
        out += ',';
        out += std::to_string(bin.frequency);
        out += '\n';
    }
    return out;
}

std::string to_csv(const EntropyResult& result) {
    std::string out = "line_index,positive_part,negative_part,total\n";
    for (std::size_t i = 0; i < result.per_line.size(); ++i) {
        const LineEntropy& line = result.per_line[i];
        out += std::to_string(i + 1);
        out += ',';
        out += format_double(line.positive_part);
        out += ',';
        out += format_double(line.negative_part);
        out += ',';
        out += format_double(line.total());
        out += '\n';
    }
    return out;
}

std::string to_csv(std::span<const BenchReport> reports) {
    std::string out = "feature,T2,D,T1,time_saved_percent,repetitions,corpus_size\n";
    for (const BenchReport& report : reports) {
        out += report.feature;
        out += ',';
        out += format_double(report.t2_seconds);
        out += ',';
        out += format_double(report.d_seconds);
        out += ',';
        out += format_double(report.t1_seconds);
        out += ',';
        out += format_double(report.saved_percent);
        out += ',';
        out += std::to_string(report.repetitions);
        out += ',';
        out += std::to_string(report.corpus_size);
        out += '\n';
    }
    return out;
}

std::string blank_lines_csv(std::size_t count) {
    return "blank_lines\n" + std::to_string(count) + "\n";
}

namespace {

void append_quoted(std::string& out, std::string_view text) {
    // Every emitted string is an identifier-like token, so no escaping.
    out += '"';
    out += text;
    out += '"';
}

} // namespace

std::string to_json(const Profile& profile) {
    std::string out = "{\"axis\":";
    append_quoted(out, profile.axis == ProfileAxis::row ? "row" : "column");
    out += ",\"values\":[";
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(profile.values[i]);
    }
    out += "]}\n";
    return out;
}

std::string to_json(const RunHistogram& hist) {
    std::string out = "{\"kind\":";
    append_quoted(out, to_string(hist.kind));
    out += ",\"counts\":[";
    bool first = true;
    for (const auto& [length, frequency] : hist.counts) {
        if (!first) out += ',';
        first = false;
        out += "{\"run_length\":";
        out += std::to_string(length);
        out += ",\"frequency\":";
        out += std::to_string(frequency);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string to_json(const LogHistogram& hist) {
    std::string out = "{\"bins\":[";
    for (std::size_t i = 0; i < hist.bins.size(); ++i) {
        const LogBin& bin = hist.bins[i];
        if (i > 0) out += ',';
        out += "{\"lower\":";
        out += std::to_string(bin.lower);
        out += ",\"upper\":";
        out += bin.upper ? std::to_string(*bin.upper) : std::string("null");
        out += ",\"frequency\":";
        out += std::to_string(bin.frequency);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string to_json(const EntropyResult& result) {
    std::string out = "{\"quantifier\":";
    append_quoted(out, to_string(result.quantifier));
    out += ",\"axis\":";
    append_quoted(out, to_string(result.axis));
    out += ",\"log_base\":";
    out += format_double(result.log_base);
    out += ",\"document_total\":";
    out += format_double(result.document_total);
    out += "}\n";
    return out;
}

std::string to_json(std::span<const BenchReport> reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const BenchReport& report = reports[i];
        if (i > 0) out += ',';
        out += "{\"feature\":";
        append_quoted(out, report.feature);
        out += ",\"T2\":";
        out += format_double(report.t2_seconds);
        out += ",\"D\":";
        out += format_double(report.d_seconds);
        out += ",\"T1\":";
        out += format_double(report.t1_seconds);
        out += ",\"time_saved_percent\":";
        out += format_double(report.saved_percent);
        out += ",\"repetitions\":";
        out += std::to_string(report.repetitions);
        out += ",\"corpus_size\":";
        out += std::to_string(report.corpus_size);
        out += ",\"parallel\":";
        out += report.parallel ? "true" : "false";
        out += ",\"per_document\":[";
        for (std::size_t d = 0; d < report.per_document.size(); ++d) {
            const DocumentTiming& timing = report.per_document[d];
            if (d > 0) out += ',';
            out += "{\"t2\":";
            out += format_double(timing.t2_seconds);
            out += ",\"decode\":";
            out += format_double(timing.decode_seconds);
            out += ",\"extract\":";
            out += format_double(timing.extract_seconds);
            out += '}';
        }
        out += "]}";
    }
    out += "]\n";
    return out;
}

std::string blank_lines_json(std::size_t count) {
    return "{\"blank_lines\":" + std::to_string(count) + "}\n";
}

namespace {

constexpr std::string_view kBenchHeader = "feature,T2,D,T1,time_saved_percent,repetitions,corpus_size";

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double_field(std::string_view field, std::size_t offset) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw FormatError(FormatErrorCode::malformed_payload, offset,
                          "expected a number, got '" + std::string(field) + "'");
    }
    return value;
}

std::size_t parse_size_field(std::string_view field, std::size_t offset) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw FormatError(FormatErrorCode::malformed_payload, offset,
                          "expected a count, got '" + std::string(field) + "'");
    }
    return value;
}

} // namespace

std::vector<BenchReport> read_bench_csv(std::string_view text) {
    std::vector<BenchReport> reports;
    std::size_t offset = 0;
    bool saw_header = false;
    while (offset < text.size()) {
        std::size_t end = text.find('\n', offset);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const std::string_view line = text.substr(offset, end - offset);
        const std::size_t line_offset = offset;
        offset = end + 1;
        if (line.empty()) {
            continue;
        }
        if (!saw_header) {
            if (line != kBenchHeader) {
                throw FormatError(FormatErrorCode::malformed_header, line_offset,
                                  "expected bench CSV header");
            }
            saw_header = true;
            continue;
        }
        const std::vector<std::string_view> fields = split(line, ',');
        if (fields.size() != 7) {
            throw FormatError(FormatErrorCode::malformed_payload, line_offset,
                              "expected 7 fields per bench row");
        }
        BenchReport report;
        report.feature = std::string(fields[0]);
        report.t2_seconds = parse_double_field(fields[1], line_offset);
        report.d_seconds = parse_double_field(fields[2], line_offset);
        report.t1_seconds = parse_double_field(fields[3], line_offset);
        parse_double_field(fields[4], line_offset); // present but never trusted
        report.repetitions = parse_size_field(fields[5], line_offset);
        report.corpus_size = parse_size_field(fields[6], line_offset);
        if (!(report.t1_seconds > 0.0)) {
            throw FormatError(FormatErrorCode::malformed_payload, line_offset,
                              "T1 must be positive");
        }
        report.saved_percent = time_saved_percent(report.t1_seconds, report.t2_seconds);
        reports.push_back(std::move(report));
    }
    if (!saw_header) {
        throw FormatError(FormatErrorCode::malformed_header, 0, "empty bench CSV");
    }
    return reports;
}

} // namespace rldoc
