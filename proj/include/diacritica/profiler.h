// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIACRITICA_PROFILER_H_
#define DIACRITICA_PROFILER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "diacritica/corpus.h"

namespace diacritica {

enum class SystemClass { kSingle, kMulti };

std::string to_string(SystemClass c);

// Descriptive diacritic usage of one corpus. Percentages are in [0, 100].
struct CorpusProfile {
  double density_pct = 0;
  // Rune tokens carrying two or more marks, over all rune tokens.
  double multi_diacritic_pct = 0;
  // Words/lines with at least one mark token.
  double pct_words_diacritized = 0;
  double pct_lines_diacritized = 0;
  // Mark tokens in diacritized words / diacritized words.
  double mean_diacs_per_diacritized_word = 0;
  // Marked rune types.
  std::size_t distinct_marked_runes = 0;
  SystemClass system_class = SystemClass::kSingle;
  std::size_t warnings = 0;  // orphan marks dropped while reading

  std::int64_t rune_tokens = 0;
  std::int64_t word_count = 0;
  std::int64_t line_count = 0;
};

// Throws Error when the corpus has no words.
CorpusProfile profile(const Corpus& corpus);

// Uniform mean of the numeric columns; Multi if any input is Multi.
CorpusProfile average_profiles(std::span<const CorpusProfile> profiles);

}  // namespace diacritica

#endif  // DIACRITICA_PROFILER_H_
