// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

// Rune model: a base letter plus the set of diacritic marks attached to it.
// Text is decomposed (NFD) before segmentation, so precomposed letters such
// as U+1EAF split into a base and its marks exactly like combining sequences.

#ifndef DIACRITICA_RUNE_H_
#define DIACRITICA_RUNE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diacritica {

struct Rune {
  char32_t base = 0;
  // Canonical order: ascending combining class, then codepoint. No repeats.
  std::vector<char32_t> marks;
  // Source letter was uppercase before folding. Not part of rune identity.
  bool uppercase = false;

  Rune() = default;
  Rune(char32_t base_char, std::vector<char32_t> mark_list,
       bool was_upper = false);

  bool marked() const { return !marks.empty(); }
  bool has_mark(char32_t mark) const;

  friend bool operator==(const Rune& a, const Rune& b) {
    return a.base == b.base && a.marks == b.marks;
  }
  friend std::strong_ordering operator<=>(const Rune& a, const Rune& b) {
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.marks <=> b.marks;
  }
};

// Sorts into canonical order and drops repeated codepoints.
void canonicalize_marks(std::vector<char32_t>& marks);

// "U+0061+U+0301": base first, then marks in canonical order.
std::string rune_key(const Rune& rune);
Rune parse_rune_key(std::string_view key);

struct ScriptProfile {
  std::string name = "latin-generic";
  std::set<char32_t> extra_mark_allowlist;
  std::set<char32_t> mark_denylist;
  bool casefold = true;

  bool is_diacritic(char32_t cp) const;
};

// Throws Error when allowlist and denylist intersect.
void validate(const ScriptProfile& profile);
ScriptProfile profile_from_json(std::string_view json_text);
std::string profile_to_json(const ScriptProfile& profile);
// Built-ins: latin-generic, hebrew, arabic, bengali.
ScriptProfile builtin_profile(std::string_view name);
std::vector<std::string> builtin_profile_names();
// Built-in name, or a path to a JSON profile document.
ScriptProfile load_profile(const std::string& name_or_path);

enum class CharRole : std::uint8_t {
  kBase,     // letter that opens a rune
  kMark,     // diacritic attached to the preceding rune
  kOrphan,   // diacritic with no preceding letter on the line, dropped
  kOther,    // separator, punctuation, digit, denylisted mark
};

// Segmentation of one decomposed line, with enough bookkeeping to rebuild
// text around the runes and to group runes into whitespace-delimited words.
struct SegmentedText {
  std::vector<Rune> runes;
  // Index of the word each rune belongs to; words are maximal runs of
  // non-whitespace that contain at least one letter.
  std::vector<std::size_t> word_of_rune;
  std::size_t word_count = 0;
  // Per input codepoint.
  std::vector<CharRole> roles;
  // Per input codepoint: owning rune for kBase/kMark, npos otherwise.
  std::vector<std::size_t> rune_of_char;
  std::size_t orphan_marks = 0;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

std::u32string normalize_decompose(std::u32string_view text);

// Expects decomposed input (see normalize_decompose).
SegmentedText segment(std::u32string_view decomposed,
                      const ScriptProfile& profile);

// Decomposes, then segments. Orphan marks are added to *orphans if given.
std::vector<Rune> segment_runes(std::u32string_view text,
                                const ScriptProfile& profile,
                                std::size_t* orphans = nullptr);
std::vector<Rune> segment_runes(std::string_view utf8,
                                const ScriptProfile& profile,
                                std::size_t* orphans = nullptr);

std::vector<Rune> strip(std::span<const Rune> runes);

// Full-text variant: decomposes and drops diacritics, keeping letters in
// their original case and every separator.
std::u32string strip_text(std::u32string_view text, const ScriptProfile& profile);

enum class RenderForm { kDecomposed, kComposed };

// Restores the uppercase flag on output.
std::u32string render(std::span<const Rune> runes, RenderForm form);

std::size_t mark_token_count(std::span<const Rune> runes);

struct RuneHash {
  std::size_t operator()(const Rune& rune) const;
};

}  // namespace diacritica

#endif  // DIACRITICA_RUNE_H_
