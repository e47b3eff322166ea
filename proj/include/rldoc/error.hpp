#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rldoc {

enum class FormatErrorCode {
    bad_magic,            // RLE1 magic line missing or wrong
    unsupported_magic,    // PBM magic other than P1/P4
    malformed_header,
    malformed_payload,
    truncated_payload,
    dimension_mismatch,
    invalid_run_sum,      // a row's runs do not sum to the pixel width
    non_alternating_zero, // a zero run after the first position
};

const char* to_string(FormatErrorCode code);

// Raised by the file readers and by document validation. Carries the byte
// offset the parser was looking at when it gave up (0 for in-memory values).
class FormatError : public std::runtime_error {
public:
    FormatError(FormatErrorCode code, std::size_t byte_offset, const std::string& detail);

    FormatErrorCode code() const { return code_; }
    std::size_t byte_offset() const { return offset_; }

private:
    FormatErrorCode code_;
    std::size_t offset_;
};

// A compressed-domain feature disagreed with its bitmap-domain counterpart.
// Aborts a benchmark: timings of wrong code are meaningless.
class MismatchError : public std::runtime_error {
public:
    MismatchError(const std::string& feature, const std::string& detail);

    const std::string& feature() const { return feature_; }

private:
    std::string feature_;
};

// File could not be opened / read / written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace rldoc
