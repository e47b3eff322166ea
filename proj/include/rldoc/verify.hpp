#pragma once

#include <string>
#include <vector>

#include "rldoc/codec.hpp"

namespace rldoc {

struct FeatureCheck {
    std::string feature;
    bool passed = false;
    std::string detail; // first differing index on failure
};

struct VerifyReport {
    std::vector<FeatureCheck> checks;

    bool all_passed() const;
};

// Decodes once, then computes every feature from both the compressed runs
// and the bitmap. Integer-valued features must match exactly; entropy
// totals and per-line parts within the relative tolerance.
VerifyReport verify_document(const RleDocument& doc, double log_base = 2.0,
                             double tolerance = 1e-12);

} // namespace rldoc
