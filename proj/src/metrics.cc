// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/metrics.h"

#include <cmath>
#include <future>

#include "diacritica/unicode.h"
#include "json.hpp"

namespace diacritica {

void FrequencyTables::add(const Rune& rune, std::int64_t count) {
  if (count <= 0) return;
  Rune key(rune.base, rune.marks);
  rune_count[key] += count;
  base_count[key.base] += count;
  total_bases += count;
  rune_types[key.base].insert(key);
  for (char32_t mark : key.marks) {
    const MarkOnBase mc{mark, key.base};
    mark_char_count[mc] += count;
    mark_types[mc].insert(key);
    total_marks += count;
  }
}

void FrequencyTables::add(std::span<const Rune> runes) {
  for (const Rune& r : runes) add(r);
}

void FrequencyTables::merge(const FrequencyTables& other) {
  for (const auto& [rune, n] : other.rune_count) rune_count[rune] += n;
  for (const auto& [mc, n] : other.mark_char_count) mark_char_count[mc] += n;
  for (const auto& [c, n] : other.base_count) base_count[c] += n;
  for (const auto& [c, types] : other.rune_types) {
    rune_types[c].insert(types.begin(), types.end());
  }
  for (const auto& [mc, types] : other.mark_types) {
    mark_types[mc].insert(types.begin(), types.end());
  }
  total_marks += other.total_marks;
  total_bases += other.total_bases;
}

FrequencyTables build_tables(const Corpus& corpus) {
  FrequencyTables t;
  for (const Sentence& s : corpus.sentences) t.add(s.runes);
  return t;
}

FrequencyTables build_tables(const Corpus& corpus, std::size_t partitions) {
  const std::size_t n = corpus.sentences.size();
  if (partitions <= 1 || n < 2) return build_tables(corpus);
  if (partitions > n) partitions = n;
  std::vector<std::future<FrequencyTables>> parts;
  parts.reserve(partitions);
  for (std::size_t p = 0; p < partitions; ++p) {
    const std::size_t begin = n * p / partitions;
    const std::size_t end = n * (p + 1) / partitions;
    parts.push_back(std::async(std::launch::async, [&corpus, begin, end] {
      FrequencyTables t;
      for (std::size_t i = begin; i < end; ++i) {
        t.add(corpus.sentences[i].runes);
      }
      return t;
    }));
  }
  FrequencyTables merged;
  for (auto& part : parts) merged.merge(part.get());
  return merged;
}

namespace {

std::int64_t base_total(const FrequencyTables& t, char32_t base) {
  const auto it = t.base_count.find(base);
  if (it == t.base_count.end()) {
    throw Error("unseen base " + format_codepoint(base));
  }
  return it->second;
}

}  // namespace

double rune_surprisal(const Rune& rune, const FrequencyTables& t) {
  const auto it = t.rune_count.find(rune);
  if (it == t.rune_count.end()) throw Error("unseen rune " + rune_key(rune));
  const double p = static_cast<double>(it->second) /
                   static_cast<double>(base_total(t, rune.base));
  return -std::log(p);
}

double diacritic_token_surprisal(const Rune& rune, const FrequencyTables& t) {
  if (rune.marks.empty()) return 0.0;
  const double denom = static_cast<double>(base_total(t, rune.base));
  double sum = 0.0;
  for (char32_t mark : rune.marks) {
    const auto it = t.mark_char_count.find({mark, rune.base});
    if (it == t.mark_char_count.end()) {
      throw Error("unseen mark " + format_codepoint(mark) + " on base " +
                  format_codepoint(rune.base));
    }
    sum -= std::log(static_cast<double>(it->second) / denom);
  }
  return sum;
}

double diacritic_structural_surprisal(const Rune& rune,
                                      const FrequencyTables& t) {
  const auto types = t.rune_types.find(rune.base);
  if (types == t.rune_types.end()) {
    throw Error("unseen base " + format_codepoint(rune.base));
  }
  const double denom = static_cast<double>(types->second.size());
  double sum = 0.0;
  for (char32_t mark : rune.marks) {
    const auto it = t.mark_types.find({mark, rune.base});
    if (it == t.mark_types.end()) {
      throw Error("unseen mark " + format_codepoint(mark) + " on base " +
                  format_codepoint(rune.base));
    }
    sum -= std::log(static_cast<double>(it->second.size()) / denom);
  }
  return sum;
}

double density(const FrequencyTables& t) {
  if (t.total_bases == 0) throw Error("empty corpus");
  return static_cast<double>(t.total_marks) /
         static_cast<double>(t.total_bases);
}

MetricReport metric_report(const FrequencyTables& t, bool per_rune) {
  MetricReport report;
  report.density = density(t);
  report.rune_token_count = t.total_bases;
  if (per_rune) report.per_rune.emplace();
  double rs = 0.0;
  double dts = 0.0;
  double dss = 0.0;
  for (const auto& [rune, count] : t.rune_count) {
    RuneMetrics m{rune, count, rune_surprisal(rune, t),
                  diacritic_token_surprisal(rune, t),
                  diacritic_structural_surprisal(rune, t)};
    const double w = static_cast<double>(count);
    rs += w * m.rs;
    dts += w * m.dts;
    dss += w * m.dss;
    if (per_rune) report.per_rune->push_back(std::move(m));
  }
  const double n = static_cast<double>(t.total_bases);
  report.mean_rs = rs / n;
  report.mean_dts = dts / n;
  report.mean_dss = dss / n;
  return report;
}

MetricReport metric_report(const Corpus& corpus, bool per_rune) {
  return metric_report(build_tables(corpus), per_rune);
}

namespace {

std::string mark_on_base_key(const MarkOnBase& mc) {
  return format_codepoint(mc.second) + "+" + format_codepoint(mc.first);
}

}  // namespace

std::string tables_to_json(const FrequencyTables& t) {
  nlohmann::ordered_json doc;
  doc["format_version"] = 1;
  auto& runes = doc["rune_count"] = nlohmann::ordered_json::object();
  for (const auto& [rune, n] : t.rune_count) runes[rune_key(rune)] = n;
  auto& marks = doc["mark_char_count"] = nlohmann::ordered_json::object();
  for (const auto& [mc, n] : t.mark_char_count) marks[mark_on_base_key(mc)] = n;
  auto& bases = doc["base_count"] = nlohmann::ordered_json::object();
  for (const auto& [c, n] : t.base_count) bases[format_codepoint(c)] = n;
  doc["total_marks"] = t.total_marks;
  doc["total_bases"] = t.total_bases;
  return doc.dump(2);
}

FrequencyTables tables_from_json(std::string_view json_text) {
  FrequencyTables t;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (doc.value("format_version", 0) != 1) {
      throw Error("frequency tables: unsupported format_version");
    }
    for (const auto& [key, n] : doc.at("rune_count").items()) {
      const auto count = n.get<std::int64_t>();
      if (count < 1) throw Error("frequency tables: non-positive count");
      t.add(parse_rune_key(key), count);
    }
    // Everything else is implied by rune_count; check the stored copies.
    FrequencyTables stored;
    for (const auto& [key, n] : doc.at("mark_char_count").items()) {
      const Rune pair = parse_rune_key(key);
      if (pair.marks.size() != 1) throw Error("frequency tables: bad key " + key);
      stored.mark_char_count[{pair.marks.front(), pair.base}] =
          n.get<std::int64_t>();
    }
    for (const auto& [key, n] : doc.at("base_count").items()) {
      stored.base_count[parse_codepoint(key)] = n.get<std::int64_t>();
    }
    if (stored.mark_char_count != t.mark_char_count ||
        stored.base_count != t.base_count ||
        doc.at("total_marks").get<std::int64_t>() != t.total_marks ||
        doc.at("total_bases").get<std::int64_t>() != t.total_bases) {
      throw Error("frequency tables: counts inconsistent with rune_count");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("frequency tables: ") + e.what());
  }
  return t;
}

}  // namespace diacritica
