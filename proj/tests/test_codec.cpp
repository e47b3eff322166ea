#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "rldoc/codec.hpp"
#include "rldoc/error.hpp"
#include "rldoc/pbm.hpp"
#include "rldoc/rle_format.hpp"

#include "golden.hpp"
#include "random_images.hpp"

using namespace rldoc;

namespace {

std::span<const std::uint8_t> as_bytes(const std::string& text) {
    return {reinterpret_cast<const std::uint8_t*>(text.data()), text.size()};
}

} // namespace

TEST_CASE("encode_rle reproduces the golden run matrix") {
    const RleDocument doc = encode_rle(golden::image());
    const RleDocument expected = golden::document();
    REQUIRE(doc.height == expected.height);
    REQUIRE(doc.width == expected.width);
    for (std::size_t r = 0; r < doc.height; ++r) {
        CAPTURE(r);
        CHECK(doc.rows[r] == expected.rows[r]);
    }
    CHECK(doc.padded_width() == golden::kPaddedWidth);
}

TEST_CASE("decode_rle reproduces the golden bitmap") {
    CHECK(decode_rle(golden::document()) == golden::image());
}

TEST_CASE("padded matrix view right-pads with structural zeros") {
    const PaddedRunMatrix padded = padded_matrix_view(golden::document());
    REQUIRE(padded.rows == golden::kHeight);
    REQUIRE(padded.cols == golden::kPaddedWidth);
    CHECK(padded.at(0, 0) == 14);
    CHECK(padded.at(0, 1) == 0);
    CHECK(padded.at(0, 4) == 0);
    CHECK(padded.at(1, 4) == 1);
    CHECK(padded.at(5, 2) == 10);
    CHECK(padded.at(5, 3) == 0);
    CHECK(padded.at(6, 0) == 0); // genuine zero-length first run, not padding
    CHECK(padded.at(6, 2) == 13);
}

TEST_CASE("encode_rle edge rows") {
    SUBCASE("all-white row is a single run") {
        BitonalImage image(1, 7);
        CHECK(encode_rle(image).rows[0] == RunRow{7});
    }
    SUBCASE("all-black row keeps the leading zero") {
        BitonalImage image(1, 7, 1);
        CHECK(encode_rle(image).rows[0] == RunRow{0, 7});
    }
    SUBCASE("single pixels") {
        CHECK(encode_rle(BitonalImage(1, 1)).rows[0] == RunRow{1});
        CHECK(encode_rle(BitonalImage(1, 1, 1)).rows[0] == RunRow{0, 1});
    }
}

TEST_CASE("decode after encode is the identity on random images") {
    std::mt19937_64 rng(7101);
    for (int i = 0; i < 200; ++i) {
        const BitonalImage image = testgen::random_image(rng);
        const RleDocument doc = encode_rle(image);
        CAPTURE(i);
        CHECK(decode_rle(doc) == image);
    }
}

TEST_CASE("validate rejects broken documents") {
    SUBCASE("zero dimensions") {
        CHECK_THROWS_AS(validate(RleDocument{0, 5, {}}), FormatError);
        CHECK_THROWS_AS(validate(RleDocument{2, 0, {{}, {}}}), FormatError);
    }
    SUBCASE("row count mismatch") {
        CHECK_THROWS_AS(validate(RleDocument{2, 5, {{5}}}), FormatError);
    }
    SUBCASE("run sum below and above the width") {
        CHECK_THROWS_AS(validate(RleDocument{1, 5, {{4}}}), FormatError);
        CHECK_THROWS_AS(validate(RleDocument{1, 5, {{2, 4}}}), FormatError);
    }
    SUBCASE("zero run after the first position") {
        try {
            validate(RleDocument{1, 5, {{2, 0, 3}}});
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.code() == FormatErrorCode::non_alternating_zero);
        }
    }
    SUBCASE("the golden document is valid") {
        CHECK_NOTHROW(validate(golden::document()));
    }
}

TEST_CASE("BitonalImage rejects zero dimensions") {
    CHECK_THROWS_AS(BitonalImage(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(BitonalImage(4, 0), std::invalid_argument);
}

TEST_CASE("transpose swaps axes and is an involution") {
    const BitonalImage image = golden::image();
    const BitonalImage t = transpose(image);
    REQUIRE(t.height() == image.width());
    REQUIRE(t.width() == image.height());
    for (std::size_t r = 0; r < image.height(); ++r) {
        for (std::size_t c = 0; c < image.width(); ++c) {
            CHECK(t.at(c, r) == image.at(r, c));
        }
    }
    CHECK(transpose(t) == image);
}

TEST_CASE("RLE1 file round trip is byte-stable") {
    const std::string text = write_rle_file(golden::document());
    CHECK(text.substr(0, 11) == "RLE1\n13 14\n");
    const RleDocument parsed = read_rle_file(text);
    CHECK(parsed == golden::document());
    CHECK(write_rle_file(parsed) == text);
}

TEST_CASE("RLE1 writer round trips random documents") {
    std::mt19937_64 rng(7102);
    for (int i = 0; i < 100; ++i) {
        const RleDocument doc = testgen::random_document(rng);
        CAPTURE(i);
        CHECK(read_rle_file(write_rle_file(doc)) == doc);
    }
}

TEST_CASE("RLE1 reader rejects malformed input") {
    const auto code_of = [](std::string_view text) {
        try {
            read_rle_file(text);
        } catch (const FormatError& e) {
            return e.code();
        }
        FAIL("expected FormatError");
        return FormatErrorCode::bad_magic;
    };
    CHECK(code_of("RLE2\n1 1\n1\n") == FormatErrorCode::bad_magic);
    CHECK(code_of("") == FormatErrorCode::bad_magic);
    CHECK(code_of("RLE1\n1\n1\n") == FormatErrorCode::malformed_header);
    CHECK(code_of("RLE1\n1  1\n1\n") == FormatErrorCode::malformed_header);
    CHECK(code_of("RLE1\n0 4\n") == FormatErrorCode::dimension_mismatch);
    CHECK(code_of("RLE1\n1 0\n\n") == FormatErrorCode::dimension_mismatch);
    CHECK(code_of("RLE1\n2 5\n5\n") == FormatErrorCode::truncated_payload);
    CHECK(code_of("RLE1\n1 5\n5\nextra\n") == FormatErrorCode::malformed_payload);
    CHECK(code_of("RLE1\n1 5\n2 x 3\n") == FormatErrorCode::malformed_payload);
    CHECK(code_of("RLE1\n1 5\n4\n") == FormatErrorCode::invalid_run_sum);
    CHECK(code_of("RLE1\n1 5\n2 0 3\n") == FormatErrorCode::non_alternating_zero);
    CHECK(code_of("RLE1\n1 5\n6\n") == FormatErrorCode::malformed_payload); // run exceeds width
}

TEST_CASE("RLE1 reader reports a useful byte offset") {
    try {
        read_rle_file("RLE1\n2 5\n5\n4\n");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.code() == FormatErrorCode::invalid_run_sum);
        CHECK(e.byte_offset() == 11); // start of the offending row line
    }
}

TEST_CASE("PBM P4 round trip is byte-stable") {
    const std::vector<std::uint8_t> bytes = write_pbm(golden::image());
    const BitonalImage parsed = read_pbm(bytes);
    CHECK(parsed == golden::image());
    CHECK(write_pbm(parsed) == bytes);
}

TEST_CASE("PBM P1 parses whitespace and comments") {
    const std::string text = "P1\n# comment line\n3 2\n1 0 1\n0 1 0\n";
    const BitonalImage image = read_pbm(as_bytes(text));
    REQUIRE(image.height() == 2);
    REQUIRE(image.width() == 3);
    CHECK(image.at(0, 0) == 1);
    CHECK(image.at(0, 1) == 0);
    CHECK(image.at(1, 1) == 1);
    // digits may also be packed without separators
    CHECK(read_pbm(as_bytes("P1\n3 2\n101010\n")) == image);
}

TEST_CASE("PBM P4 packs rows MSB-first with byte padding") {
    // 10 columns: second byte carries only 2 significant bits
    BitonalImage image(1, 10);
    image.set(0, 0, 1);
    image.set(0, 9, 1);
    const std::vector<std::uint8_t> bytes = write_pbm(image);
    const std::string header = "P4\n10 1\n";
    REQUIRE(bytes.size() == header.size() + 2);
    CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);
    CHECK(bytes[header.size()] == 0x80);
    CHECK(bytes[header.size() + 1] == 0x40);
    CHECK(read_pbm(bytes) == image);
}

TEST_CASE("PBM reader rejects malformed input") {
    const auto code_of = [&](const std::string& text) {
        try {
            read_pbm(as_bytes(text));
        } catch (const FormatError& e) {
            return e.code();
        }
        FAIL("expected FormatError");
        return FormatErrorCode::bad_magic;
    };
    CHECK(code_of("P2\n1 1\n0\n") == FormatErrorCode::unsupported_magic);
    CHECK(code_of("") == FormatErrorCode::unsupported_magic);
    CHECK(code_of("P1\n0 2\n") == FormatErrorCode::malformed_header);
    CHECK(code_of("P1\n2\n") == FormatErrorCode::malformed_header);
    CHECK(code_of("P1\n2 2\n1 0 1\n") == FormatErrorCode::truncated_payload);
    CHECK(code_of("P1\n2 2\n1 0 1 2\n") == FormatErrorCode::malformed_payload);
    CHECK(code_of("P1\n2 2\n1 0 1 1 1\n") == FormatErrorCode::malformed_payload);
    CHECK(code_of(std::string("P4\n10 1\n\x80", 9)) == FormatErrorCode::truncated_payload);
    CHECK(code_of(std::string("P4\n10 1\n\x80\x40\x00", 11)) == FormatErrorCode::malformed_payload);
}

TEST_CASE("PBM and RLE1 agree through the codec on random images") {
    std::mt19937_64 rng(7103);
    for (int i = 0; i < 50; ++i) {
        const BitonalImage image = testgen::random_image(rng);
        CAPTURE(i);
        CHECK(read_pbm(write_pbm(image)) == image);
        CHECK(decode_rle(read_rle_file(write_rle_file(encode_rle(image)))) == image);
    }
}
