// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIACRITICA_TESTS_SYNTHETIC_H_
#define DIACRITICA_TESTS_SYNTHETIC_H_

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace synthetic {

inline const std::set<char32_t> kMarks = {0x0301, 0x0308, 0x0323};

// Random decomposed lines: up to `max_runes` runes over up to 4 bases and 3
// marks, marks emitted in random order. `max_marks_per_rune` caps stacking.
inline std::vector<std::u32string> random_lines(std::mt19937_64& rng,
                                                std::size_t max_runes = 50,
                                                int max_marks_per_rune = 3) {
  const std::u32string bases = U"abcd";
  const std::vector<char32_t> marks(kMarks.begin(), kMarks.end());
  const std::size_t n_bases = 1 + rng() % bases.size();
  const std::size_t n_marks = 1 + rng() % marks.size();
  const std::size_t n_runes = 1 + rng() % max_runes;
  std::vector<std::u32string> lines(1 + rng() % 4);
  for (std::size_t i = 0; i < n_runes; ++i) {
    std::u32string& line = lines[rng() % lines.size()];
    if (!line.empty() && rng() % 3 == 0) line.push_back(U' ');
    line.push_back(bases[rng() % n_bases]);
    std::vector<char32_t> chosen;
    for (std::size_t m = 0; m < n_marks; ++m) {
      if (rng() % 3 == 0) chosen.push_back(marks[m]);
    }
    std::shuffle(chosen.begin(), chosen.end(), rng);
    if (static_cast<int>(chosen.size()) > max_marks_per_rune) {
      chosen.resize(static_cast<std::size_t>(max_marks_per_rune));
    }
    line.append(chosen.begin(), chosen.end());
  }
  // Lines that received no rune would be skipped on read; drop them here.
  std::vector<std::u32string> out;
  for (auto& l : lines) {
    if (!l.empty()) out.push_back(l);
  }
  return out;
}

}  // namespace synthetic

#endif  // DIACRITICA_TESTS_SYNTHETIC_H_
