#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rldoc/codec.hpp"

namespace rldoc {

// Parses plain (P1) or raw (P4) PBM. PBM's 1 = black maps directly onto the
// pixel bit; raw rows are byte-padded per the format, padding bits ignored.
// Throws FormatError: unsupported_magic, malformed_header, malformed_payload,
// truncated_payload.
BitonalImage read_pbm(std::span<const std::uint8_t> bytes);

// Emits raw (P4) PBM with the canonical "P4\n<w> <h>\n" header.
std::vector<std::uint8_t> write_pbm(const BitonalImage& image);

} // namespace rldoc
