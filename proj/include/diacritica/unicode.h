// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIACRITICA_UNICODE_H_
#define DIACRITICA_UNICODE_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diacritica {

// Thrown for malformed input: bad UTF-8, bad files, bad JSON documents.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Utf8Error : public Error {
 public:
  explicit Utf8Error(std::size_t byte_offset);
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Strict decoding: rejects overlongs, surrogates and values above U+10FFFF.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

std::u32string nfd(std::u32string_view text);
std::u32string nfc(std::u32string_view text);

bool is_letter(char32_t cp);
// General category Mn or Mc.
bool is_combining_mark(char32_t cp);
bool is_whitespace(char32_t cp);
std::uint8_t combining_class(char32_t cp);
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
bool is_upper(char32_t cp);

// "U+00E1" style, at least four hex digits.
std::string format_codepoint(char32_t cp);
// Accepts "U+00E1", "u+e1" and "0x00E1".
char32_t parse_codepoint(std::string_view text);

}  // namespace diacritica

#endif  // DIACRITICA_UNICODE_H_
