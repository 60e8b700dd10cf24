// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/unicode.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <charconv>
#include <cstdio>

namespace diacritica {

Utf8Error::Utf8Error(std::size_t byte_offset)
    : Error("invalid UTF-8 at byte offset " + std::to_string(byte_offset)),
      byte_offset_(byte_offset) {}

std::u32string decode_utf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char lead = p[i];
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    char32_t min;
    if ((lead & 0xE0) == 0xC0) {
      len = 2, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4, cp = lead & 0x07, min = 0x10000;
    } else {
      throw Utf8Error(i);
    }
    if (i + len > n) throw Utf8Error(i);
    for (int k = 1; k < len; ++k) {
      const unsigned char cont = p[i + k];
      if ((cont & 0xC0) != 0x80) throw Utf8Error(i);
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw Utf8Error(i);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

namespace {

icu::UnicodeString to_icu(std::u32string_view text) {
  return icu::UnicodeString::fromUTF32(
      reinterpret_cast<const UChar32*>(text.data()),
      static_cast<int32_t>(text.size()));
}

std::u32string from_icu(const icu::UnicodeString& s) {
  UErrorCode status = U_ZERO_ERROR;
  const int32_t length = s.countChar32();
  std::u32string out(static_cast<std::size_t>(length), U'\0');
  s.toUTF32(reinterpret_cast<UChar32*>(out.data()), length, status);
  if (U_FAILURE(status)) throw Error(u_errorName(status));
  return out;
}

std::u32string normalize(const icu::Normalizer2* norm,
                         std::u32string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = norm->normalize(to_icu(text), status);
  if (U_FAILURE(status)) throw Error(u_errorName(status));
  return from_icu(out);
}

const icu::Normalizer2* nfd_instance() {
  UErrorCode status = U_ZERO_ERROR;
  static const icu::Normalizer2* norm = icu::Normalizer2::getNFDInstance(status);
  if (norm == nullptr) throw Error("ICU NFD data unavailable");
  return norm;
}

const icu::Normalizer2* nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  static const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (norm == nullptr) throw Error("ICU NFC data unavailable");
  return norm;
}

}  // namespace

std::u32string nfd(std::u32string_view text) {
  return normalize(nfd_instance(), text);
}

std::u32string nfc(std::u32string_view text) {
  return normalize(nfc_instance(), text);
}

bool is_letter(char32_t cp) { return u_isalpha(static_cast<UChar32>(cp)); }

bool is_combining_mark(char32_t cp) {
  const auto type = u_charType(static_cast<UChar32>(cp));
  return type == U_NON_SPACING_MARK || type == U_COMBINING_SPACING_MARK;
}

bool is_whitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

std::uint8_t combining_class(char32_t cp) {
  return u_getCombiningClass(static_cast<UChar32>(cp));
}

char32_t to_lower(char32_t cp) {
  return static_cast<char32_t>(u_tolower(static_cast<UChar32>(cp)));
}

char32_t to_upper(char32_t cp) {
  return static_cast<char32_t>(u_toupper(static_cast<UChar32>(cp)));
}

bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

std::string format_codepoint(char32_t cp) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "U+%04X", static_cast<unsigned>(cp));
  return buf;
}

char32_t parse_codepoint(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() > 2 && (digits.substr(0, 2) == "U+" ||
                            digits.substr(0, 2) == "u+" ||
                            digits.substr(0, 2) == "0x" ||
                            digits.substr(0, 2) == "0X")) {
    digits.remove_prefix(2);
  } else {
    throw Error("bad codepoint literal '" + std::string(text) + "'");
  }
  unsigned value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      value > 0x10FFFF) {
    throw Error("bad codepoint literal '" + std::string(text) + "'");
  }
  return static_cast<char32_t>(value);
}

}  // namespace diacritica
