// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/eval.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "diacritica/unicode.h"

namespace diacritica {

EvalReport evaluate(const Corpus& gold, const Corpus& hyp) {
  if (gold.sentences.size() != hyp.sentences.size()) {
    throw Error("line count mismatch: gold has " +
                std::to_string(gold.sentences.size()) + ", hypothesis has " +
                std::to_string(hyp.sentences.size()));
  }
  std::size_t runes = 0;
  std::size_t runes_ok = 0;
  std::size_t words = 0;
  std::size_t words_ok = 0;
  std::vector<bool> word_ok;
  for (std::size_t line = 0; line < gold.sentences.size(); ++line) {
    const Sentence& g = gold.sentences[line];
    const Sentence& h = hyp.sentences[line];
    const std::size_t n = std::min(g.runes.size(), h.runes.size());
    for (std::size_t i = 0; i <= n; ++i) {
      const bool past_end = i == n;
      if (past_end ? g.runes.size() != h.runes.size()
                   : g.runes[i].base != h.runes[i].base) {
        throw Error("base-letter mismatch at line " +
                    std::to_string(g.line_index) + ", rune " +
                    std::to_string(i + 1));
      }
    }
    word_ok.assign(g.word_count, true);
    for (std::size_t i = 0; i < n; ++i) {
      const bool ok = g.runes[i] == h.runes[i];
      runes_ok += ok ? 1 : 0;
      if (!ok) word_ok[g.word_of_rune[i]] = false;
    }
    runes += n;
    words += g.word_count;
    words_ok += static_cast<std::size_t>(
        std::count(word_ok.begin(), word_ok.end(), true));
  }
  EvalReport report;
  report.n_runes = runes;
  report.n_words = words;
  report.rune_accuracy =
      runes == 0 ? 100.0 : 100.0 * static_cast<double>(runes_ok) / static_cast<double>(runes);
  report.word_accuracy =
      words == 0 ? 100.0 : 100.0 * static_cast<double>(words_ok) / static_cast<double>(words);
  return report;
}

namespace {

constexpr double kBetaTolerance = 1e-12;
constexpr int kBetaMaxIterations = 300;

// Continued fraction for I_x(a, b), modified Lentz.
double beta_continued_fraction(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kBetaMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kBetaTolerance) break;
  }
  return h;
}

}  // namespace

double incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw Error("incomplete_beta: a, b must be > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(x, a, b) / a;
  }
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double student_t_two_tailed(double t, double dof) {
  if (!(dof > 0.0)) throw Error("student_t: dof must be > 0");
  if (std::isinf(t)) return 0.0;
  const double x = dof / (dof + t * t);
  return incomplete_beta(x, dof / 2.0, 0.5);
}

std::string significance_stars(double p) {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  return "";
}

CorrelationReport pearson(std::span<const double> xs,
                          std::span<const double> ys) {
  if (xs.size() != ys.size()) throw Error("pearson: series lengths differ");
  const std::size_t n = xs.size();
  if (n < 3) throw Error("pearson: need at least 3 observations");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw Error("zero variance");

  CorrelationReport rep;
  rep.n = n;
  rep.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double dof = static_cast<double>(n - 2);
  if (std::fabs(rep.r) == 1.0) {
    rep.t_stat = std::copysign(std::numeric_limits<double>::infinity(), rep.r);
    rep.p_two_tailed = 0.0;
  } else {
    rep.t_stat = rep.r * std::sqrt(dof / (1.0 - rep.r * rep.r));
    rep.p_two_tailed = student_t_two_tailed(rep.t_stat, dof);
  }
  rep.stars = significance_stars(rep.p_two_tailed);
  return rep;
}

std::optional<std::size_t> DataTable::column(std::string_view name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

namespace {

std::vector<std::string> split_tsv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    cells.emplace_back(line.substr(pos, tab == std::string_view::npos
                                            ? std::string_view::npos
                                            : tab - pos));
    if (tab == std::string_view::npos) return cells;
    pos = tab + 1;
  }
}

bool is_missing(std::string_view cell) { return cell.empty() || cell == "--"; }

std::optional<double> to_number(std::string_view cell) {
  if (is_missing(cell)) return std::nullopt;
  // Accept the typographic minus used in published tables.
  std::string text(cell);
  if (text.rfind("\xE2\x88\x92", 0) == 0) text = "-" + text.substr(3);
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error("not a number: '" + std::string(cell) + "'");
  }
  return value;
}

}  // namespace

DataTable parse_tsv(std::string_view text) {
  DataTable table;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto cells = split_tsv_line(line);
    if (header) {
      table.columns = std::move(cells);
      header = false;
      continue;
    }
    cells.resize(table.columns.size());
    table.rows.push_back(std::move(cells));
  }
  return table;
}

DataTable read_tsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tsv(buf.str());
}

DataTable join_tables(std::span<const DataTable> tables) {
  DataTable out;
  if (tables.empty()) return out;
  auto key_of = [](const DataTable& t, const std::vector<std::string>& row) {
    const auto lang = t.column("language");
    const auto corpus = t.column("corpus");
    return std::make_pair(lang ? row[*lang] : std::string(),
                          corpus ? row[*corpus] : std::string());
  };
  std::vector<std::pair<std::string, std::string>> keys;
  for (const DataTable& t : tables) {
    for (const std::string& c : t.columns) {
      if (!out.column(c)) out.columns.push_back(c);
    }
  }
  for (const DataTable& t : tables) {
    for (const auto& row : t.rows) {
      const auto key = key_of(t, row);
      auto it = std::find(keys.begin(), keys.end(), key);
      std::size_t index;
      if (it == keys.end()) {
        keys.push_back(key);
        out.rows.emplace_back(out.columns.size());
        index = out.rows.size() - 1;
      } else {
        index = static_cast<std::size_t>(it - keys.begin());
      }
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        auto& cell = out.rows[index][*out.column(t.columns[c])];
        if (is_missing(cell)) cell = row[c];
      }
    }
  }
  return out;
}

CorrelationReport correlate_table(const DataTable& table, std::string_view x,
                                  std::string_view y) {
  const auto xc = table.column(x);
  const auto yc = table.column(y);
  if (!xc) throw Error("no column '" + std::string(x) + "'");
  if (!yc) throw Error("no column '" + std::string(y) + "'");
  std::vector<double> xs;
  std::vector<double> ys;
  std::size_t dropped = 0;
  for (const auto& row : table.rows) {
    const auto xv = to_number(row[*xc]);
    const auto yv = to_number(row[*yc]);
    if (!xv || !yv) {
      ++dropped;
      continue;
    }
    xs.push_back(*xv);
    ys.push_back(*yv);
  }
  if (xs.size() < 3) {
    throw Error("correlate: only " + std::to_string(xs.size()) +
                " usable rows (need 3)");
  }
  CorrelationReport rep = pearson(xs, ys);
  rep.dropped_rows = dropped;
  return rep;
}

}  // namespace diacritica
