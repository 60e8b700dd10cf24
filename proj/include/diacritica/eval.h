// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIACRITICA_EVAL_H_
#define DIACRITICA_EVAL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diacritica/corpus.h"

namespace diacritica {

struct EvalReport {
  double word_accuracy = 0;  // percent
  double rune_accuracy = 0;  // percent
  std::size_t n_words = 0;
  std::size_t n_runes = 0;
};

// Line-aligned comparison of case-folded runes. Throws Error naming the
// line and rune position when the hypothesis changed base letters.
EvalReport evaluate(const Corpus& gold, const Corpus& hyp);

struct CorrelationReport {
  double r = 0;
  std::size_t n = 0;
  double t_stat = 0;
  double p_two_tailed = 1;
  std::string stars;
  std::size_t dropped_rows = 0;
};

// Regularized incomplete beta I_x(a, b); Lentz continued fraction with
// relative tolerance 1e-12 and at most 300 iterations.
double incomplete_beta(double x, double a, double b);

// Two-tailed Student-t tail probability P(|T| >= |t|) with `dof` degrees.
double student_t_two_tailed(double t, double dof);

// "***" p<0.001, "**" p<0.01, "*" p<0.05, "" otherwise.
std::string significance_stars(double p);

// Requires n >= 3 and non-constant series.
CorrelationReport pearson(std::span<const double> xs, std::span<const double> ys);

// Column-named table; cells that are empty or "--" are missing.
struct DataTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::optional<std::size_t> column(std::string_view name) const;
};

DataTable parse_tsv(std::string_view text);
DataTable read_tsv(const std::string& path);

// Joins on (language, corpus); later tables fill columns the row lacks.
DataTable join_tables(std::span<const DataTable> tables);

// Rows missing either value are dropped and counted.
CorrelationReport correlate_table(const DataTable& table, std::string_view x,
                                  std::string_view y);

}  // namespace diacritica

#endif  // DIACRITICA_EVAL_H_
