// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

// Corpus frequency tables and the per-rune surprisal metrics built on them.
//
// For a rune r with base c and mark set M(r):
//   RS(r)  = -ln( #(r) / #(c) )
//   DTS(r) = sum_{d in M(r)} -ln( #(d,c) / #(c) )
//   DSS(r) = sum_{d in M(r)} -ln( |T_d(c)| / |T(c)| )
// where #(c) counts every occurrence of base c, marked or not, T(c) is the
// set of rune types over c and T_d(c) those carrying d. Natural log. The DTS
// denominator is #(c), not the total of marks seen on c: only the former
// reproduces the published Spanish worked example (DTS 0.156 vs 0).
//
// Corpus values are token-weighted means over every rune token, unmarked
// runes included. No smoothing: querying an unseen event throws.

#ifndef DIACRITICA_METRICS_H_
#define DIACRITICA_METRICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diacritica/corpus.h"
#include "diacritica/rune.h"

namespace diacritica {

// (mark, base)
using MarkOnBase = std::pair<char32_t, char32_t>;

struct FrequencyTables {
  std::map<Rune, std::int64_t> rune_count;
  std::map<MarkOnBase, std::int64_t> mark_char_count;
  std::map<char32_t, std::int64_t> base_count;
  std::map<char32_t, std::set<Rune>> rune_types;
  std::map<MarkOnBase, std::set<Rune>> mark_types;
  std::int64_t total_marks = 0;
  std::int64_t total_bases = 0;

  void add(const Rune& rune, std::int64_t count = 1);
  void add(std::span<const Rune> runes);
  // Associative and commutative.
  void merge(const FrequencyTables& other);
  bool empty() const { return total_bases == 0; }

  friend bool operator==(const FrequencyTables&,
                         const FrequencyTables&) = default;
};

FrequencyTables build_tables(const Corpus& corpus);
// Splits sentences into `partitions` contiguous slices counted on separate
// threads and merged; the result does not depend on the partition count.
FrequencyTables build_tables(const Corpus& corpus, std::size_t partitions);

// Throws Error("unseen rune") etc. for events absent from the tables.
double rune_surprisal(const Rune& rune, const FrequencyTables& t);
double diacritic_token_surprisal(const Rune& rune, const FrequencyTables& t);
double diacritic_structural_surprisal(const Rune& rune,
                                      const FrequencyTables& t);
// Throws Error("empty corpus") when there are no base tokens.
double density(const FrequencyTables& t);

struct RuneMetrics {
  Rune rune;
  std::int64_t count = 0;
  double rs = 0;
  double dts = 0;
  double dss = 0;
};

struct MetricReport {
  double density = 0;
  double mean_rs = 0;
  double mean_dts = 0;
  double mean_dss = 0;
  std::int64_t rune_token_count = 0;
  // Rune types in canonical order; filled when requested.
  std::optional<std::vector<RuneMetrics>> per_rune;
};

MetricReport metric_report(const FrequencyTables& t, bool per_rune = false);
MetricReport metric_report(const Corpus& corpus, bool per_rune = false);

// {"format_version":1,"rune_count":{"U+0061+U+0301":n,...},
//  "mark_char_count":{"U+0061+U+0301":n,...},"base_count":{"U+0061":n},
//  "total_marks":n,"total_bases":n}; mark_char_count keys are base+mark.
std::string tables_to_json(const FrequencyTables& t);
FrequencyTables tables_from_json(std::string_view json_text);

}  // namespace diacritica

#endif  // DIACRITICA_METRICS_H_
