// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIACRITICA_BASELINE_H_
#define DIACRITICA_BASELINE_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "diacritica/corpus.h"
#include "diacritica/rune.h"

namespace diacritica {

// Most-frequent-form restorer: whole-word lookup on the stripped, case-folded
// word, then per-letter fallback. Ties go to the form whose decomposed
// codepoint sequence sorts first.
struct BaselineModel {
  static constexpr int kFormatVersion = 1;

  // Stripped base sequence -> modal diacritized rune sequence.
  std::map<std::u32string, std::vector<Rune>> word_map;
  std::map<char32_t, Rune> char_map;

  std::string profile_name;
  bool casefold = true;
  // FNV-1a 64 over the decomposed training sentences, newline-joined.
  std::string corpus_digest;
};

BaselineModel train(const Corpus& corpus);

// Existing diacritics in `text` are replaced by predictions; base letters and
// non-letters are emitted unchanged. Output is decomposed.
std::u32string diacritize(const BaselineModel& model, std::u32string_view text,
                          const ScriptProfile& profile);
std::string diacritize(const BaselineModel& model, std::string_view utf8,
                       const ScriptProfile& profile);

std::string model_to_json(const BaselineModel& model);
BaselineModel model_from_json(std::string_view json_text);

std::string fnv1a64_hex(std::string_view bytes);

}  // namespace diacritica

#endif  // DIACRITICA_BASELINE_H_
