#include "rldoc/error.hpp"

namespace rldoc {

const char* to_string(FormatErrorCode code) {
    switch (code) {
        case FormatErrorCode::bad_magic: return "bad magic";
        case FormatErrorCode::unsupported_magic: return "unsupported magic";
        case FormatErrorCode::malformed_header: return "malformed header";
        case FormatErrorCode::malformed_payload: return "malformed payload";
        case FormatErrorCode::truncated_payload: return "truncated payload";
        case FormatErrorCode::dimension_mismatch: return "dimension mismatch";
        case FormatErrorCode::invalid_run_sum: return "invalid run sum";
        case FormatErrorCode::non_alternating_zero: return "non-alternating zero run";
    }
    return "unknown";
}

FormatError::FormatError(FormatErrorCode code, std::size_t byte_offset, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + " at byte " +
                         std::to_string(byte_offset) + ": " + detail),
      code_(code),
      offset_(byte_offset) {}

MismatchError::MismatchError(const std::string& feature, const std::string& detail)
    : std::runtime_error("feature '" + feature + "' mismatch: " + detail), feature_(feature) {}

} // namespace rldoc
