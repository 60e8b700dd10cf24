// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/unicode.h"

#include <gtest/gtest.h>

namespace diacritica {
namespace {

TEST(Utf8Test, DecodesAndEncodes) {
  const std::string text = "a\xC3\xA1\xE1\xBA\xAF\xF0\x9F\x98\x80";
  const std::u32string cps = decode_utf8(text);
  EXPECT_EQ(cps, (std::u32string{U'a', 0x00E1, 0x1EAF, 0x1F600}));
  EXPECT_EQ(encode_utf8(cps), text);
}

TEST(Utf8Test, ReportsByteOffset) {
  try {
    decode_utf8("ab\xC3(");
    FAIL() << "expected Utf8Error";
  } catch (const Utf8Error& e) {
    EXPECT_EQ(e.byte_offset(), 2u);
  }
  EXPECT_THROW(decode_utf8("\xC0\x80"), Utf8Error);      // overlong
  EXPECT_THROW(decode_utf8("\xED\xA0\x80"), Utf8Error);  // surrogate
  EXPECT_THROW(decode_utf8("\xF4\x90\x80\x80"), Utf8Error);
  EXPECT_THROW(decode_utf8("\xE1\xBA"), Utf8Error);      // truncated
}

TEST(PropertyTest, Categories) {
  EXPECT_TRUE(is_letter(U'a'));
  EXPECT_TRUE(is_letter(0x05D1));
  EXPECT_FALSE(is_letter(U'1'));
  EXPECT_TRUE(is_combining_mark(0x0301));
  EXPECT_TRUE(is_combining_mark(0x09BE));  // Mc
  EXPECT_FALSE(is_combining_mark(U'a'));
  EXPECT_EQ(combining_class(0x0301), 230);
  EXPECT_EQ(combining_class(0x05BC), 21);
  EXPECT_EQ(to_lower(U'E'), U'e');
}

TEST(CodepointTest, FormatAndParse) {
  EXPECT_EQ(format_codepoint(0x301), "U+0301");
  EXPECT_EQ(format_codepoint(0x1F600), "U+1F600");
  EXPECT_EQ(parse_codepoint("U+05BC"), 0x05BCu);
  EXPECT_EQ(parse_codepoint("0x301"), 0x301u);
  EXPECT_THROW(parse_codepoint("05BC"), Error);
  EXPECT_THROW(parse_codepoint("U+ZZ"), Error);
  EXPECT_THROW(parse_codepoint("U+110000"), Error);
}

}  // namespace
}  // namespace diacritica
