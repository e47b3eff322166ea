#pragma once

#include <string>
#include <string_view>

#include "rldoc/codec.hpp"

namespace rldoc {

/*
  ASCII container for run-length documents ("RLE1"):

    line 1:        RLE1
    line 2:        <m> <n>            (decimal, single space)
    lines 3..m+2:  run lengths for one row, white-first, single spaces,
                   no trailing spaces, LF line endings.

  write_rle_file then read_rle_file is the identity, byte for byte.
*/

// Throws FormatError: bad_magic, malformed_header, malformed_payload,
// truncated_payload, dimension_mismatch, invalid_run_sum,
// non_alternating_zero.
RleDocument read_rle_file(std::string_view text);

std::string write_rle_file(const RleDocument& doc);

} // namespace rldoc
