// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DIACRITICA_CORPUS_H_
#define DIACRITICA_CORPUS_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "diacritica/rune.h"

namespace diacritica {

struct Sentence {
  std::string raw_text;  // UTF-8, as read
  std::vector<Rune> runes;
  // Whitespace-delimited word each rune belongs to (see SegmentedText).
  std::vector<std::size_t> word_of_rune;
  std::size_t word_count = 0;
  std::size_t line_index = 0;  // 1-based source line (CoNLL-U: block start)
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string language_label;
  std::string family_label;
  std::string profile_name;
  std::size_t orphan_marks = 0;

  std::size_t rune_count() const;
  bool empty() const { return sentences.empty(); }
};

// Segments raw_text under the profile.
Sentence make_sentence(std::string raw_text, const ScriptProfile& profile,
                       std::size_t line_index, std::size_t* orphans = nullptr);

// Builds a corpus from in-memory lines; blank lines are skipped.
Corpus corpus_from_lines(const std::vector<std::string>& lines,
                         const ScriptProfile& profile);
Corpus corpus_from_text(std::string_view text, const ScriptProfile& profile);

// One sentence per non-empty line. Invalid UTF-8 raises Utf8Error with the
// absolute byte offset in the file.
Corpus read_plaintext(const std::filesystem::path& path,
                      const ScriptProfile& profile);

// CoNLL-U: "# text =" when present, otherwise FORM tokens joined with single
// spaces honoring SpaceAfter=No; multiword-token ranges replace their parts.
Corpus read_conllu(const std::filesystem::path& path,
                   const ScriptProfile& profile);
Corpus parse_conllu(std::string_view text, const ScriptProfile& profile);

// Chooses the reader by extension (.conllu / .conll) and falls back to
// plain text.
Corpus read_corpus(const std::filesystem::path& path,
                   const ScriptProfile& profile);

// xoshiro256** (Blackman & Vigna), state seeded by four successive
// splitmix64 outputs starting from the user seed:
//   splitmix64: z = (x += 0x9E3779B97F4A7C15);
//               z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
//               z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
//   next:       r = rotl(s1 * 5, 7) * 9; t = s1 << 17;
//               s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t;
//               s3 = rotl(s3, 45); return r
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed);
  std::uint64_t next();
  // Uniform in [0, bound) by rejection: draws below 2^64 mod bound are
  // discarded, the rest reduced modulo bound.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> s_;
};

// Fisher-Yates, i from n-1 down to 1, j = uniform(i + 1).
template <typename T>
void shuffle(std::vector<T>& items, Xoshiro256& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.uniform(i));
    std::swap(items[i - 1], items[j]);
  }
}

struct SamplingConfig {
  std::size_t target_base_chars = 300000;
  std::uint64_t seed = 0;
};

// Shuffles sentence order and accumulates whole sentences until the rune
// count reaches the target; the crossing sentence is kept. An exhausted
// corpus is reshuffled from the same generator and drawn again.
Corpus sample(const Corpus& corpus, const SamplingConfig& cfg);

// One sentence per line, decomposed, each line newline-terminated.
void write_plaintext(std::ostream& out, const Corpus& corpus);

}  // namespace diacritica

#endif  // DIACRITICA_CORPUS_H_
