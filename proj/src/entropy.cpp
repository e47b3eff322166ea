#include "rldoc/entropy.hpp"

#include <cmath>
#include <stdexcept>

#include "rldoc/profiles.hpp"

namespace rldoc {

namespace {

void check_log_base(double log_base) {
    if (!(log_base > 0.0) || log_base == 1.0) {
        throw std::invalid_argument("log base must be positive and not equal to 1");
    }
}

// log_base(x) computed as a quotient of natural logs so that, e.g.,
// log2(2) == 1.0 exactly: log(x)/log(x) divides to 1.0 in IEEE arithmetic.
double log_in_base(double x, double ln_base) { return std::log(x) / ln_base; }

// Binary entropy H(p) = p log(1/p) + (1-p) log(1/(1-p)) with the
// 0 * log(1/0) = 0 convention covering both p = 0 and p = 1.
double binary_entropy(std::uint64_t count, std::uint64_t slots, double ln_base) {
    const double p = static_cast<double>(count) / static_cast<double>(slots);
    double h = 0.0;
    if (count > 0) {
        h += p * log_in_base(1.0 / p, ln_base);
    }
    if (count < slots) {
        h += (1.0 - p) * log_in_base(1.0 / (1.0 - p), ln_base);
    }
    return h;
}

} // namespace

TransitionSummary row_transitions(const RunRow& runs, std::size_t width) {
    TransitionSummary summary;
    summary.line_length = width;
    std::uint32_t prefix = 0;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (i % 2 == 1) {
            // A black run starts here: a 0 -> 1 step into its first pixel.
            summary.pos_positions.push_back(prefix + 1);
        } else if (i > 0) {
            // A white run after a black one: a 1 -> 0 step.
            summary.neg_positions.push_back(prefix + 1);
        }
        prefix += runs[i];
    }
    return summary;
}

TransitionSummary scan_transitions(std::span<const std::uint8_t> pixels) {
    TransitionSummary summary;
    summary.line_length = pixels.size();
    std::uint8_t prev = 0;
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        if (pixels[i] != prev) {
            const auto position = static_cast<std::uint32_t>(i + 1);
            if (pixels[i] != 0) {
                summary.pos_positions.push_back(position);
            } else {
                summary.neg_positions.push_back(position);
            }
            prev = pixels[i];
        }
    }
    return summary;
}

std::vector<TransitionSummary> row_transitions(const RleDocument& doc) {
    std::vector<TransitionSummary> lines;
    lines.reserve(doc.height);
    for (const RunRow& runs : doc.rows) {
        lines.push_back(row_transitions(runs, doc.width));
    }
    return lines;
}

std::vector<TransitionSummary> row_transitions(const BitonalImage& image) {
    std::vector<TransitionSummary> lines;
    lines.reserve(image.height());
    for (std::size_t r = 0; r < image.height(); ++r) {
        lines.push_back(scan_transitions({image.row(r), image.width()}));
    }
    return lines;
}

std::vector<TransitionSummary> column_transitions(const RleDocument& doc) {
    std::vector<TransitionSummary> lines(doc.width);
    for (TransitionSummary& line : lines) {
        line.line_length = doc.height;
    }
    // stream_columns hands over whole virtually decompressed columns, so the
    // per-column scan below is the same adjacent-pair rule as scan_transitions.
    stream_columns(doc, [&](std::size_t c, std::span<const std::uint8_t> column) {
        TransitionSummary& line = lines[c];
        std::uint8_t p = 0;
        for (std::size_t r = 0; r < column.size(); ++r) {
            if (column[r] != p) {
                const auto position = static_cast<std::uint32_t>(r + 1);
                if (column[r] != 0) {
                    line.pos_positions.push_back(position);
                } else {
                    line.neg_positions.push_back(position);
                }
                p = column[r];
            }
        }
    });
    return lines;
}

std::vector<TransitionSummary> column_transitions(const BitonalImage& image) {
    std::vector<TransitionSummary> lines;
    lines.reserve(image.width());
    std::vector<std::uint8_t> column(image.height());
    for (std::size_t c = 0; c < image.width(); ++c) {
        for (std::size_t r = 0; r < image.height(); ++r) {
            column[r] = image.at(r, c);
        }
        lines.push_back(scan_transitions(column));
    }
    return lines;
}

bool EntropyResult::has_degenerate_lines() const {
    for (const LineEntropy& line : per_line) {
        if (line.degenerate) {
            return true;
        }
    }
    return false;
}

LineEntropy ceq_line(const TransitionSummary& line, double log_base) {
    check_log_base(log_base);
    LineEntropy entry{};
    if (line.line_length < 2) {
        entry.degenerate = true;
        return entry;
    }
    const double ln_base = std::log(log_base);
    const std::uint64_t slots = line.line_length - 1;
    entry.positive_part = binary_entropy(line.pos_count(), slots, ln_base);
    entry.negative_part = binary_entropy(line.neg_count(), slots, ln_base);
    return entry;
}

LineEntropy seq_line(const TransitionSummary& line,
                     std::size_t line_count,
                     std::size_t line_index,
                     double log_base) {
    check_log_base(log_base);
    LineEntropy entry{};
    const double ln_base = std::log(log_base);
    const double m = static_cast<double>(line_count);
    const double n = static_cast<double>(line.line_length);
    const double weight = static_cast<double>(line_index) / m;

    const auto term = [&](const std::vector<std::uint32_t>& positions) {
        double sum = 0.0;
        for (std::uint32_t position : positions) {
            const double pos = static_cast<double>(position);
            sum += weight * (pos / n * log_in_base(n / pos, ln_base) +
                             (m - pos / n) * log_in_base(m / (m + n - pos), ln_base));
        }
        return sum;
    };

    entry.positive_part = term(line.pos_positions);
    entry.negative_part = term(line.neg_positions);
    return entry;
}

namespace {

template <typename LineFn>
EntropyResult accumulate(Quantifier quantifier,
                         EntropyAxis axis,
                         double log_base,
                         std::size_t line_count,
                         LineFn line_fn) {
    EntropyResult result;
    result.quantifier = quantifier;
    result.axis = axis;
    result.log_base = log_base;
    result.per_line.reserve(line_count);
    result.document_total = 0.0;
    // Per-line totals are added in ascending line order so the floating-point
    // result is reproducible across both extraction paths.
    for (std::size_t i = 0; i < line_count; ++i) {
        result.per_line.push_back(line_fn(i));
        result.document_total += result.per_line.back().total();
    }
    return result;
}

EntropyResult ceq_over(std::vector<TransitionSummary> lines, EntropyAxis axis, double log_base) {
    return accumulate(Quantifier::ceq, axis, log_base, lines.size(),
                      [&](std::size_t i) { return ceq_line(lines[i], log_base); });
}

EntropyResult seq_over(std::vector<TransitionSummary> lines, EntropyAxis axis, double log_base) {
    const std::size_t line_count = lines.size();
    return accumulate(Quantifier::seq, axis, log_base, line_count, [&](std::size_t i) {
        return seq_line(lines[i], line_count, i + 1, log_base);
    });
}

} // namespace

EntropyResult ceq_horizontal(const RleDocument& doc, double log_base) {
    check_log_base(log_base);
    return ceq_over(row_transitions(doc), EntropyAxis::horizontal, log_base);
}

EntropyResult ceq_horizontal(const BitonalImage& image, double log_base) {
    check_log_base(log_base);
    return ceq_over(row_transitions(image), EntropyAxis::horizontal, log_base);
}

EntropyResult ceq_vertical(const RleDocument& doc, double log_base) {
    check_log_base(log_base);
    return ceq_over(column_transitions(doc), EntropyAxis::vertical, log_base);
}

EntropyResult ceq_vertical(const BitonalImage& image, double log_base) {
    check_log_base(log_base);
    return ceq_over(column_transitions(image), EntropyAxis::vertical, log_base);
}

EntropyResult seq_horizontal(const RleDocument& doc, double log_base) {
    check_log_base(log_base);
    return seq_over(row_transitions(doc), EntropyAxis::horizontal, log_base);
}

EntropyResult seq_horizontal(const BitonalImage& image, double log_base) {
    check_log_base(log_base);
    return seq_over(row_transitions(image), EntropyAxis::horizontal, log_base);
}

EntropyResult seq_vertical(const RleDocument& doc, double log_base) {
    check_log_base(log_base);
    return seq_over(column_transitions(doc), EntropyAxis::vertical, log_base);
}

EntropyResult seq_vertical(const BitonalImage& image, double log_base) {
    check_log_base(log_base);
    return seq_over(column_transitions(image), EntropyAxis::vertical, log_base);
}

} // namespace rldoc
