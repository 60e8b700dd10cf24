// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/profiler.h"

#include <gtest/gtest.h>

#include <random>

#include "diacritica/unicode.h"
#include "examples.h"
#include "synthetic.h"

namespace diacritica {
namespace {

const ScriptProfile kLatin = builtin_profile("latin-generic");

TEST(ProfileTest, SpanishSentence) {
  const Corpus c = corpus_from_lines({encode_utf8(examples::kSpanishComposed)}, kLatin);
  const CorpusProfile p = profile(c);
  EXPECT_EQ(p.distinct_marked_runes, 3u);
  EXPECT_NEAR(p.pct_words_diacritized, 400.0 / 7.0, 1e-12);
  EXPECT_DOUBLE_EQ(p.mean_diacs_per_diacritized_word, 1.0);
  EXPECT_DOUBLE_EQ(p.density_pct, 16.0);
  EXPECT_EQ(p.multi_diacritic_pct, 0.0);
  EXPECT_DOUBLE_EQ(p.pct_lines_diacritized, 100.0);
  EXPECT_EQ(p.system_class, SystemClass::kSingle);
}

TEST(ProfileTest, RuneInventories) {
  const Corpus german = corpus_from_lines(
      {"Über die Brücke läuft ein Bär", "schön öffnen Männer", "der Hund"}, kLatin);
  EXPECT_EQ(profile(german).distinct_marked_runes, 3u);
  const Corpus spanish = corpus_from_lines(
      {"árbol éxito índice óvalo único pingüino niño", "Ángel ÚLTIMO"}, kLatin);
  EXPECT_EQ(profile(spanish).distinct_marked_runes, 7u);
}

TEST(ProfileTest, MultiMarkedRuneMakesSystemMulti) {
  const Corpus c = corpus_from_lines({"tiếng việt", "ba"}, kLatin);
  const CorpusProfile p = profile(c);
  EXPECT_EQ(p.system_class, SystemClass::kMulti);
  EXPECT_GT(p.multi_diacritic_pct, 0.0);
  EXPECT_DOUBLE_EQ(p.pct_lines_diacritized, 50.0);
  EXPECT_DOUBLE_EQ(p.mean_diacs_per_diacritized_word, 2.0);
}

TEST(ProfileTest, ErrorsWithoutWords) {
  EXPECT_THROW(profile(corpus_from_lines({"123 !!"}, kLatin)), Error);
  EXPECT_THROW(profile(Corpus{}), Error);
}

TEST(ProfileTest, AverageRow) {
  CorpusProfile a;
  a.density_pct = 2;
  a.distinct_marked_runes = 3;
  CorpusProfile b;
  b.density_pct = 4;
  b.distinct_marked_runes = 6;
  b.system_class = SystemClass::kMulti;
  const std::vector<CorpusProfile> both = {a, b};
  const CorpusProfile avg = average_profiles(both);
  EXPECT_DOUBLE_EQ(avg.density_pct, 3.0);
  EXPECT_EQ(avg.distinct_marked_runes, 5u);  // 4.5 rounds up
  EXPECT_EQ(avg.system_class, SystemClass::kMulti);
}

TEST(ProfileProperty, RangesAndInvariants) {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::string> lines;
    for (const auto& l : synthetic::random_lines(rng)) lines.push_back(encode_utf8(l));
    const Corpus c = corpus_from_lines(lines, kLatin);
    const CorpusProfile p = profile(c);
    for (double pct : {p.density_pct, p.multi_diacritic_pct, p.pct_words_diacritized,
                       p.pct_lines_diacritized}) {
      EXPECT_GE(pct, 0.0);
    }
    for (double pct : {p.multi_diacritic_pct, p.pct_words_diacritized,
                       p.pct_lines_diacritized}) {
      EXPECT_LE(pct, 100.0);
    }
    std::size_t marked_tokens = 0;
    bool every_line = true;
    for (const auto& s : c.sentences) {
      std::size_t line_marks = 0;
      for (const auto& r : s.runes) {
        marked_tokens += r.marked() ? 1 : 0;
        line_marks += r.marks.size();
      }
      every_line = every_line && line_marks > 0;
    }
    EXPECT_LE(p.distinct_marked_runes, marked_tokens);
    EXPECT_EQ(p.pct_lines_diacritized == 100.0, every_line);
    EXPECT_EQ(p.system_class == SystemClass::kMulti, p.multi_diacritic_pct > 0);
    if (p.pct_words_diacritized > 0) EXPECT_GE(p.mean_diacs_per_diacritized_word, 1.0);
  }
}

TEST(ProfileProperty, SampleKeepsSystemClass) {
  // Every line carries a stacked rune, so any sample includes one.
  std::vector<std::string> lines;
  for (int i = 0; i < 50; ++i) lines.push_back("ệ" + std::string(static_cast<std::size_t>(i % 7), 'a'));
  const Corpus c = corpus_from_lines(lines, kLatin);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(profile(sample(c, {1 + seed * 13, seed})).system_class,
              profile(c).system_class);
  }
}

}  // namespace
}  // namespace diacritica
