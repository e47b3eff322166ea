#include "rldoc/verify.hpp"

#include <cmath>
#include <string>

#include "rldoc/entropy.hpp"
#include "rldoc/histograms.hpp"
#include "rldoc/profiles.hpp"
#include "rldoc/serialize.hpp"

namespace rldoc {

bool VerifyReport::all_passed() const {
    for (const FeatureCheck& check : checks) {
        if (!check.passed) {
            return false;
        }
    }
    return true;
}

namespace {

bool close(double a, double b, double tolerance) {
    if (a == b) {
        return true;
    }
    const double scale = std::max(std::fabs(a), std::fabs(b));
    return std::fabs(a - b) <= tolerance * scale;
}

FeatureCheck check_profile(const char* name, const Profile& compressed, const Profile& bitmap) {
    FeatureCheck check{name, true, {}};
    if (compressed == bitmap) {
        return check;
    }
    check.passed = false;
    for (std::size_t i = 0; i < compressed.values.size(); ++i) {
        if (compressed.values[i] != bitmap.values[i]) {
            check.detail = "index " + std::to_string(i + 1) + ": compressed " +
                           std::to_string(compressed.values[i]) + ", bitmap " +
                           std::to_string(bitmap.values[i]);
            break;
        }
    }
    return check;
}

FeatureCheck check_histogram(const char* name, const RunHistogram& compressed,
                             const RunHistogram& bitmap) {
    FeatureCheck check{name, true, {}};
    if (compressed.counts == bitmap.counts) {
        return check;
    }
    check.passed = false;
    auto a = compressed.counts.begin();
    auto b = bitmap.counts.begin();
    while (a != compressed.counts.end() && b != bitmap.counts.end()) {
        if (a->first != b->first || a->second != b->second) {
            break;
        }
        ++a;
        ++b;
    }
    const RunLength length = a != compressed.counts.end()
                                 ? a->first
                                 : (b != bitmap.counts.end() ? b->first : 0);
    check.detail = "run length " + std::to_string(length) + " differs";
    return check;
}

template <typename T>
FeatureCheck check_equal(const char* name, const T& compressed, const T& bitmap) {
    FeatureCheck check{name, compressed == bitmap, {}};
    if (!check.passed) {
        check.detail = "values differ";
    }
    return check;
}

FeatureCheck check_transitions(const char* name, const std::vector<TransitionSummary>& compressed,
                               const std::vector<TransitionSummary>& bitmap) {
    FeatureCheck check{name, true, {}};
    if (compressed == bitmap) {
        return check;
    }
    check.passed = false;
    for (std::size_t i = 0; i < compressed.size(); ++i) {
        if (compressed[i] != bitmap[i]) {
            check.detail = "line " + std::to_string(i + 1) + " differs";
            break;
        }
    }
    return check;
}

FeatureCheck check_entropy(const char* name, const EntropyResult& compressed,
                           const EntropyResult& bitmap, double tolerance) {
    FeatureCheck check{name, true, {}};
    for (std::size_t i = 0; i < compressed.per_line.size(); ++i) {
        const LineEntropy& a = compressed.per_line[i];
        const LineEntropy& b = bitmap.per_line[i];
        if (!close(a.positive_part, b.positive_part, tolerance) ||
            !close(a.negative_part, b.negative_part, tolerance) || a.degenerate != b.degenerate) {
            check.passed = false;
            check.detail = "line " + std::to_string(i + 1) + ": compressed (" +
                           format_double(a.positive_part) + ", " + format_double(a.negative_part) +
                           "), bitmap (" + format_double(b.positive_part) + ", " +
                           format_double(b.negative_part) + ")";
            return check;
        }
    }
    if (!close(compressed.document_total, bitmap.document_total, tolerance)) {
        check.passed = false;
        check.detail = "document total: compressed " + format_double(compressed.document_total) +
                       ", bitmap " + format_double(bitmap.document_total);
    }
    return check;
}

} // namespace

VerifyReport verify_document(const RleDocument& doc, double log_base, double tolerance) {
    const BitonalImage image = decode_rle(doc);

    VerifyReport report;
    report.checks.push_back(check_profile("row-profile", row_profile(doc), row_profile(image)));
    report.checks.push_back(
        check_profile("column-profile", column_profile(doc), column_profile(image)));
    report.checks.push_back(
        check_histogram("black-hist", black_run_histogram(doc), black_run_histogram(image)));
    report.checks.push_back(
        check_histogram("white-hist", white_run_histogram(doc), white_run_histogram(image)));
    report.checks.push_back(check_histogram("combined-hist", combined_run_histogram(doc),
                                            combined_run_histogram(image)));
    report.checks.push_back(check_equal("log-hist",
                                        log_scale_histogram(combined_run_histogram(doc)),
                                        log_scale_histogram(combined_run_histogram(image))));
    report.checks.push_back(
        check_equal("blank-lines", blank_line_count(doc), blank_line_count(image)));
    report.checks.push_back(
        check_transitions("row-transitions", row_transitions(doc), row_transitions(image)));
    report.checks.push_back(check_transitions("column-transitions", column_transitions(doc),
                                              column_transitions(image)));
    report.checks.push_back(check_entropy("ceq-h", ceq_horizontal(doc, log_base),
                                          ceq_horizontal(image, log_base), tolerance));
    report.checks.push_back(check_entropy("seq-h", seq_horizontal(doc, log_base),
                                          seq_horizontal(image, log_base), tolerance));
    report.checks.push_back(check_entropy("ceq-v", ceq_vertical(doc, log_base),
                                          ceq_vertical(image, log_base), tolerance));
    report.checks.push_back(check_entropy("seq-v", seq_vertical(doc, log_base),
                                          seq_vertical(image, log_base), tolerance));
    return report;
}

} // namespace rldoc
