// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/profiler.h"

#include <set>
#include <vector>

#include "diacritica/unicode.h"

namespace diacritica {

std::string to_string(SystemClass c) {
  return c == SystemClass::kMulti ? "Multi" : "Single";
}

CorpusProfile profile(const Corpus& corpus) {
  std::int64_t runes = 0;
  std::int64_t marks = 0;
  std::int64_t multi = 0;
  std::int64_t words = 0;
  std::int64_t diac_words = 0;
  std::int64_t marks_in_diac_words = 0;
  std::int64_t diac_lines = 0;
  std::set<Rune> marked_types;

  std::vector<std::int64_t> marks_per_word;
  for (const Sentence& s : corpus.sentences) {
    marks_per_word.assign(s.word_count, 0);
    std::int64_t line_marks = 0;
    for (std::size_t i = 0; i < s.runes.size(); ++i) {
      const Rune& r = s.runes[i];
      const auto k = static_cast<std::int64_t>(r.marks.size());
      ++runes;
      marks += k;
      line_marks += k;
      if (k >= 2) ++multi;
      if (k > 0) marked_types.insert(Rune(r.base, r.marks));
      marks_per_word[s.word_of_rune[i]] += k;
    }
    words += static_cast<std::int64_t>(s.word_count);
    for (std::int64_t m : marks_per_word) {
      if (m > 0) {
        ++diac_words;
        marks_in_diac_words += m;
      }
    }
    if (line_marks > 0) ++diac_lines;
  }
  if (words == 0) throw Error("corpus has no words");

  CorpusProfile p;
  p.rune_tokens = runes;
  p.word_count = words;
  p.line_count = static_cast<std::int64_t>(corpus.sentences.size());
  p.density_pct = 100.0 * static_cast<double>(marks) / static_cast<double>(runes);
  p.multi_diacritic_pct =
      100.0 * static_cast<double>(multi) / static_cast<double>(runes);
  p.pct_words_diacritized =
      100.0 * static_cast<double>(diac_words) / static_cast<double>(words);
  p.pct_lines_diacritized = 100.0 * static_cast<double>(diac_lines) /
                            static_cast<double>(p.line_count);
  p.mean_diacs_per_diacritized_word =
      diac_words == 0 ? 0.0
                      : static_cast<double>(marks_in_diac_words) /
                            static_cast<double>(diac_words);
  p.distinct_marked_runes = marked_types.size();
  p.system_class = multi > 0 ? SystemClass::kMulti : SystemClass::kSingle;
  p.warnings = corpus.orphan_marks;
  return p;
}

CorpusProfile average_profiles(std::span<const CorpusProfile> profiles) {
  CorpusProfile avg;
  if (profiles.empty()) return avg;
  double n_runes = 0;
  for (const CorpusProfile& p : profiles) {
    avg.density_pct += p.density_pct;
    avg.multi_diacritic_pct += p.multi_diacritic_pct;
    avg.pct_words_diacritized += p.pct_words_diacritized;
    avg.pct_lines_diacritized += p.pct_lines_diacritized;
    avg.mean_diacs_per_diacritized_word += p.mean_diacs_per_diacritized_word;
    n_runes += static_cast<double>(p.distinct_marked_runes);
    avg.warnings += p.warnings;
    avg.rune_tokens += p.rune_tokens;
    avg.word_count += p.word_count;
    avg.line_count += p.line_count;
    if (p.system_class == SystemClass::kMulti) {
      avg.system_class = SystemClass::kMulti;
    }
  }
  const double k = static_cast<double>(profiles.size());
  avg.density_pct /= k;
  avg.multi_diacritic_pct /= k;
  avg.pct_words_diacritized /= k;
  avg.pct_lines_diacritized /= k;
  avg.mean_diacs_per_diacritized_word /= k;
  avg.distinct_marked_runes =
      static_cast<std::size_t>(n_runes / k + 0.5);
  return avg;
}

}  // namespace diacritica
