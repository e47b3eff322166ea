#include "rldoc/profiles.hpp"

namespace rldoc {

Profile row_profile(const RleDocument& doc, std::size_t* runs_touched) {
    Profile profile{ProfileAxis::row, {}};
    profile.values.reserve(doc.height);
    std::size_t touched = 0;
    for (const RunRow& runs : doc.rows) {
        std::uint32_t black = 0;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            black += runs[i] * static_cast<std::uint32_t>(i & 1);
        }
        touched += runs.size();
        profile.values.push_back(black);
    }
    if (runs_touched) {
        *runs_touched = touched;
    }
    return profile;
}

Profile row_profile(const BitonalImage& image) {
    Profile profile{ProfileAxis::row, {}};
    profile.values.reserve(image.height());
    for (std::size_t r = 0; r < image.height(); ++r) {
        const std::uint8_t* px = image.row(r);
        std::uint32_t black = 0;
        for (std::size_t c = 0; c < image.width(); ++c) {
            black += px[c];
        }
        profile.values.push_back(black);
    }
    return profile;
}

Profile column_profile(const RleDocument& doc) {
    Profile profile{ProfileAxis::column, {}};
    profile.values.reserve(doc.width);
    stream_columns(doc, [&](std::size_t, std::span<const std::uint8_t> bits) {
        std::uint32_t black = 0;
        for (std::uint8_t bit : bits) {
            black += bit;
        }
        profile.values.push_back(black);
    });
    return profile;
}

Profile column_profile(const BitonalImage& image) {
    Profile profile{ProfileAxis::column, {}};
    profile.values.assign(image.width(), 0);
    for (std::size_t r = 0; r < image.height(); ++r) {
        const std::uint8_t* px = image.row(r);
        for (std::size_t c = 0; c < image.width(); ++c) {
            profile.values[c] += px[c];
        }
    }
    return profile;
}

} // namespace rldoc
