// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/metrics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diacritica/unicode.h"
#include "examples.h"
#include "oracle.h"
#include "synthetic.h"

namespace diacritica {
namespace {

const ScriptProfile kLatin = builtin_profile("latin-generic");

Corpus corpus_of(const std::vector<std::u32string>& lines,
                 const ScriptProfile& profile = kLatin) {
  std::vector<std::string> utf8;
  for (const auto& l : lines) utf8.push_back(encode_utf8(l));
  return corpus_from_lines(utf8, profile);
}

const Rune kN(U'n', {});
const Rune kNTilde(U'n', {0x0303});
const Rune kEAcute(U'e', {0x0301});

TEST(OracleTest, MatchesFrozenWorkedExamples) {
  const auto es = oracle::corpus_means({examples::kSpanishDecomposed},
                                       examples::kSpanishMarks);
  EXPECT_NEAR(es.rs, examples::kSpanishRs, 1e-15);
  EXPECT_NEAR(es.dts, examples::kSpanishDts, 1e-15);
  EXPECT_NEAR(es.dss, examples::kSpanishDss, 1e-15);
  const auto he = oracle::corpus_means({examples::kHebrew}, examples::kHebrewMarks);
  EXPECT_NEAR(he.rs, examples::kHebrewRs, 1e-15);
  EXPECT_NEAR(he.dts, examples::kHebrewDts, 1e-15);
  EXPECT_NEAR(he.dss, examples::kHebrewDss, 1e-15);
}

TEST(BuildTablesTest, SpanishCounts) {
  const auto t = build_tables(corpus_of({examples::kSpanishComposed}));
  EXPECT_EQ(t.total_bases, 25);
  EXPECT_EQ(t.total_marks, 4);
  std::set<char32_t> marks;
  for (const auto& [mc, n] : t.mark_char_count) marks.insert(mc.first);
  EXPECT_EQ(marks.size(), 2u);
  EXPECT_EQ(t.base_count.at(U'n'), 5);
  EXPECT_EQ(t.rune_count.at(kNTilde), 2);
  EXPECT_EQ(t.rune_types.at(U'n').size(), 2u);
}

TEST(BuildTablesTest, HebrewCounts) {
  const auto t = build_tables(
      corpus_of({examples::kHebrew}, builtin_profile("hebrew")));
  EXPECT_EQ(t.total_bases, 14);
  EXPECT_EQ(t.total_marks, 14);
  std::set<char32_t> marks;
  for (const auto& [mc, n] : t.mark_char_count) marks.insert(mc.first);
  EXPECT_EQ(marks.size(), 6u);
}

TEST(BuildTablesTest, PlainLetters) {
  const auto t = build_tables(corpus_of({U"aaa"}));
  EXPECT_EQ(t.base_count.at(U'a'), 3);
  EXPECT_EQ(t.total_marks, 0);
  EXPECT_TRUE(build_tables(Corpus{}).empty());
}

TEST(BuildTablesTest, Invariants) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const auto t = build_tables(corpus_of(synthetic::random_lines(rng)));
    std::int64_t sum = 0;
    for (const auto& [r, n] : t.rune_count) {
      EXPECT_GE(n, 1);
      sum += n;
    }
    EXPECT_EQ(sum, t.total_bases);
    for (const auto& [c, types] : t.rune_types) {
      std::int64_t per_base = 0;
      for (const Rune& r : types) per_base += t.rune_count.at(r);
      EXPECT_EQ(per_base, t.base_count.at(c));
    }
    for (const auto& [mc, types] : t.mark_types) {
      for (const Rune& r : types) EXPECT_TRUE(t.rune_types.at(mc.second).contains(r));
    }
  }
}

TEST(SurprisalTest, SpanishPerRune) {
  const auto t = build_tables(corpus_of({examples::kSpanishComposed}));
  EXPECT_NEAR(rune_surprisal(kN, t), -std::log(0.6), 1e-12);
  EXPECT_NEAR(rune_surprisal(kNTilde, t), -std::log(0.4), 1e-12);
  EXPECT_EQ(rune_surprisal(Rune(U'l', {}), t), 0.0);
  EXPECT_EQ(diacritic_token_surprisal(kN, t), 0.0);
  EXPECT_NEAR(diacritic_token_surprisal(kNTilde, t), -std::log(2.0 / 5.0), 1e-12);
  EXPECT_NEAR(diacritic_token_surprisal(kEAcute, t), std::log(4.0), 1e-12);
  EXPECT_EQ(diacritic_structural_surprisal(kN, t), 0.0);
  EXPECT_NEAR(diacritic_structural_surprisal(kNTilde, t), std::log(2.0), 1e-12);
}

TEST(SurprisalTest, FullCoverageMarkHasZeroStructuralSurprisal) {
  // Every type of 'a' carries the acute.
  const auto t = build_tables(corpus_of({U"á ạ́"}));
  EXPECT_EQ(diacritic_structural_surprisal(Rune(U'a', {0x0301}), t), 0.0);
  EXPECT_GT(diacritic_structural_surprisal(Rune(U'a', {0x0323, 0x0301}), t), 0.0);
}

TEST(SurprisalTest, UnseenEventsThrow) {
  const auto t = build_tables(corpus_of({U"ab"}));
  EXPECT_THROW(rune_surprisal(Rune(U'a', {0x0301}), t), Error);
  EXPECT_THROW(rune_surprisal(Rune(U'z', {}), t), Error);
  EXPECT_THROW(diacritic_token_surprisal(Rune(U'a', {0x0301}), t), Error);
  EXPECT_THROW(diacritic_structural_surprisal(Rune(U'z', {}), t), Error);
  EXPECT_THROW(density(FrequencyTables{}), Error);
}

TEST(DensityTest, WorkedExamples) {
  EXPECT_DOUBLE_EQ(density(build_tables(corpus_of({examples::kSpanishComposed}))), 0.16);
  EXPECT_DOUBLE_EQ(
      density(build_tables(corpus_of({examples::kHebrew}, builtin_profile("hebrew")))),
      1.0);
  EXPECT_EQ(density(build_tables(corpus_of({U"plain text"}))), 0.0);
}

TEST(MetricReportTest, SpanishExample) {
  const auto rep = metric_report(corpus_of({examples::kSpanishComposed}), true);
  EXPECT_NEAR(rep.mean_rs, examples::kSpanishRs, 1e-12);
  EXPECT_NEAR(rep.mean_dts, examples::kSpanishDts, 1e-12);
  EXPECT_NEAR(rep.mean_dss, examples::kSpanishDss, 1e-12);
  EXPECT_EQ(rep.rune_token_count, 25);
  ASSERT_TRUE(rep.per_rune.has_value());
  std::int64_t tokens = 0;
  for (const auto& m : *rep.per_rune) tokens += m.count;
  EXPECT_EQ(tokens, 25);
}

TEST(MetricReportTest, HebrewExampleMatchesOracle) {
  const auto rep =
      metric_report(corpus_of({examples::kHebrew}, builtin_profile("hebrew")));
  EXPECT_NEAR(rep.mean_rs, examples::kHebrewRs, 1e-12);
  EXPECT_NEAR(rep.mean_dts, examples::kHebrewDts, 1e-12);
  EXPECT_NEAR(rep.mean_dss, examples::kHebrewDss, 1e-12);
}

TEST(MetricReportTest, UnmarkedCorpusIsAllZero) {
  const auto rep = metric_report(corpus_of({U"hello world", U"abc"}));
  EXPECT_EQ(rep.density, 0.0);
  EXPECT_EQ(rep.mean_rs, 0.0);
  EXPECT_EQ(rep.mean_dts, 0.0);
  EXPECT_EQ(rep.mean_dss, 0.0);
  EXPECT_THROW(metric_report(Corpus{}), Error);
}

TEST(MetricProperty, DuplicationInvarianceAndMergeOrder) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto lines = synthetic::random_lines(rng);
    auto doubled = lines;
    doubled.insert(doubled.end(), lines.begin(), lines.end());
    const Corpus c = corpus_of(lines);
    const auto a = metric_report(c);
    const auto b = metric_report(corpus_of(doubled));
    EXPECT_EQ(a.density, b.density);
    EXPECT_EQ(a.mean_rs, b.mean_rs);
    EXPECT_EQ(a.mean_dts, b.mean_dts);
    EXPECT_EQ(a.mean_dss, b.mean_dss);

    const auto whole = build_tables(c);
    EXPECT_EQ(build_tables(c, 3), whole);
    FrequencyTables reversed;
    for (auto it = c.sentences.rbegin(); it != c.sentences.rend(); ++it) {
      FrequencyTables part;
      part.add(it->runes);
      reversed.merge(part);
    }
    EXPECT_EQ(reversed, whole);
  }
}

TEST(MetricProperty, SingleDiacriticRunesHaveDtsEqualRs) {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 200; ++iter) {
    const auto t = build_tables(corpus_of(synthetic::random_lines(rng, 50, 1)));
    const auto rep = metric_report(t, true);
    for (const auto& m : *rep.per_rune) {
      EXPECT_GE(m.rs, 0.0);
      EXPECT_GE(m.dts, 0.0);
      EXPECT_GE(m.dss, 0.0);
      if (m.rune.marked()) EXPECT_NEAR(m.dts, m.rs, 1e-12);
      EXPECT_EQ(m.rs == 0.0, t.rune_types.at(m.rune.base).size() == 1);
    }
    EXPECT_LE(rep.mean_dts, rep.mean_rs + 1e-15);
  }
}

TEST(MetricProperty, MatchesBruteForceOracle) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const auto lines = synthetic::random_lines(rng);
    const auto t = build_tables(corpus_of(lines));
    for (const auto& [rune, n] : t.rune_count) {
      oracle::SimpleRune q{rune.base, {rune.marks.begin(), rune.marks.end()}};
      const auto v = oracle::per_rune(lines, synthetic::kMarks, q);
      ASSERT_NEAR(rune_surprisal(rune, t), v.rs, 1e-12);
      ASSERT_NEAR(diacritic_token_surprisal(rune, t), v.dts, 1e-12);
      ASSERT_NEAR(diacritic_structural_surprisal(rune, t), v.dss, 1e-12);
    }
  }
}

TEST(TablesJsonTest, RoundTripAndValidation) {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 20; ++iter) {
    const auto t = build_tables(corpus_of(synthetic::random_lines(rng)));
    EXPECT_EQ(tables_from_json(tables_to_json(t)), t);
  }
  const auto t = build_tables(corpus_of({U"ñn"}));
  const std::string json = tables_to_json(t);
  EXPECT_NE(json.find("\"U+006E+U+0303\": 1"), std::string::npos) << json;
  std::string tampered = json;
  tampered.replace(tampered.find("\"total_bases\": 2"), 16, "\"total_bases\": 3");
  EXPECT_THROW(tables_from_json(tampered), Error);
  EXPECT_THROW(tables_from_json("{}"), Error);
}

}  // namespace
}  // namespace diacritica
