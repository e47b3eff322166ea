#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rldoc/codec.hpp"

namespace rldoc {

/*
  0->1 (+ve) and 1->0 (-ve) pixel changes along one line. Positions are
  1-based pixel indices of the pixel after the change; a line starting black
  counts a +ve transition at position 1. Merged positions strictly increase
  and strictly alternate in sign, starting +ve.
*/
struct TransitionSummary {
    std::size_t line_length = 0;
    std::vector<std::uint32_t> pos_positions; // ascending
    std::vector<std::uint32_t> neg_positions; // ascending

    std::size_t pos_count() const { return pos_positions.size(); }
    std::size_t neg_count() const { return neg_positions.size(); }

    bool operator==(const TransitionSummary&) const = default;
};

// Compressed domain: each black run is a +ve transition, each white run
// except the first a -ve one, at position (sum of the previous runs) + 1.
TransitionSummary row_transitions(const RunRow& row, std::size_t width);

// Reference path: adjacent-pair scan over the pixels of one line.
TransitionSummary scan_transitions(std::span<const std::uint8_t> line);

std::vector<TransitionSummary> row_transitions(const RleDocument& doc);
std::vector<TransitionSummary> row_transitions(const BitonalImage& image);

// One summary per column (line_length = m), extracted from the column
// stream; the bitmap overload scans materialized columns instead.
std::vector<TransitionSummary> column_transitions(const RleDocument& doc);
std::vector<TransitionSummary> column_transitions(const BitonalImage& image);

enum class Quantifier { ceq, seq };
enum class EntropyAxis { horizontal, vertical };

struct LineEntropy {
    double positive_part = 0.0;
    double negative_part = 0.0;
    bool degenerate = false; // line shorter than 2 pixels, CEQ only

    double total() const { return positive_part + negative_part; }

    bool operator==(const LineEntropy&) const = default;
};

struct EntropyResult {
    Quantifier quantifier = Quantifier::ceq;
    EntropyAxis axis = EntropyAxis::horizontal;
    double log_base = 2.0;
    std::vector<LineEntropy> per_line;
    double document_total = 0.0; // per-line totals summed in line order

    bool has_degenerate_lines() const;
};

/*
  CEQ: each part is the binary entropy of its transition rate
  p = count / (line_length - 1), with 0 * log(1/0) taken as 0. Parts lie in
  [0, 1] in base 2. A line shorter than 2 pixels admits no transitions; its
  parts are (0, 0) and the degenerate flag is set.
*/
LineEntropy ceq_line(const TransitionSummary& line, double log_base);

/*
  SEQ: for each transition at position pos of a line of length n, line index
  r_a of line_count m (both 1-based counts), accumulates

      (r_a/m) * ( (pos/n) * log(n/pos) + (m - pos/n) * log(m/(m+n-pos)) )

  into the part of the transition's sign. Every term is finite for valid
  positions 1 <= pos <= n; terms may legitimately be negative.
*/
LineEntropy seq_line(const TransitionSummary& line, std::size_t line_count,
                     std::size_t line_index, double log_base);

// Horizontal: lines are the m rows. Vertical: lines are the n columns, with
// the roles of (line count, line length) swapped, so a vertical result
// equals the horizontal one of the transposed bitmap's encoding.
// The BitonalImage overloads evaluate the same formulas from a pixel scan.
EntropyResult ceq_horizontal(const RleDocument& doc, double log_base = 2.0);
EntropyResult ceq_horizontal(const BitonalImage& image, double log_base = 2.0);
EntropyResult seq_horizontal(const RleDocument& doc, double log_base = 2.0);
EntropyResult seq_horizontal(const BitonalImage& image, double log_base = 2.0);
EntropyResult ceq_vertical(const RleDocument& doc, double log_base = 2.0);
EntropyResult ceq_vertical(const BitonalImage& image, double log_base = 2.0);
EntropyResult seq_vertical(const RleDocument& doc, double log_base = 2.0);
EntropyResult seq_vertical(const BitonalImage& image, double log_base = 2.0);

} // namespace rldoc
