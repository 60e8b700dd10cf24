// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/corpus.h"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "diacritica/unicode.h"

namespace diacritica {

std::size_t Corpus::rune_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences) n += s.runes.size();
  return n;
}

Sentence make_sentence(std::string raw_text, const ScriptProfile& profile,
                       std::size_t line_index, std::size_t* orphans) {
  SegmentedText seg = segment(nfd(decode_utf8(raw_text)), profile);
  if (orphans != nullptr) *orphans += seg.orphan_marks;
  Sentence s;
  s.runes = std::move(seg.runes);
  s.word_of_rune = std::move(seg.word_of_rune);
  s.word_count = seg.word_count;
  s.raw_text = std::move(raw_text);
  s.line_index = line_index;
  return s;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool is_blank(std::string_view line) {
  for (char32_t cp : decode_utf8(line)) {
    if (!is_whitespace(cp)) return false;
  }
  return true;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(pos));
      return cols;
    }
    cols.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

bool parse_index(std::string_view text, std::size_t& value) {
  if (text.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool space_after_no(std::string_view misc) {
  std::size_t pos = 0;
  while (pos <= misc.size()) {
    std::size_t bar = misc.find('|', pos);
    if (bar == std::string_view::npos) bar = misc.size();
    if (misc.substr(pos, bar - pos) == "SpaceAfter=No") return true;
    pos = bar + 1;
  }
  return false;
}

[[noreturn]] void conllu_error(std::size_t line_no, const std::string& what) {
  throw Error("CoNLL-U line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Corpus corpus_from_text(std::string_view text, const ScriptProfile& profile) {
  decode_utf8(text);  // validates the whole buffer, offsets are absolute
  Corpus corpus;
  corpus.profile_name = profile.name;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (is_blank(line)) continue;
    corpus.sentences.push_back(make_sentence(std::string(line), profile,
                                             line_no, &corpus.orphan_marks));
  }
  return corpus;
}

Corpus corpus_from_lines(const std::vector<std::string>& lines,
                         const ScriptProfile& profile) {
  Corpus corpus;
  corpus.profile_name = profile.name;
  std::size_t line_no = 0;
  for (const std::string& line : lines) {
    ++line_no;
    if (is_blank(line)) continue;
    corpus.sentences.push_back(
        make_sentence(line, profile, line_no, &corpus.orphan_marks));
  }
  return corpus;
}

Corpus read_plaintext(const std::filesystem::path& path,
                      const ScriptProfile& profile) {
  const std::string text = read_file(path);
  try {
    return corpus_from_text(text, profile);
  } catch (const Utf8Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

Corpus parse_conllu(std::string_view text, const ScriptProfile& profile) {
  decode_utf8(text);
  Corpus corpus;
  corpus.profile_name = profile.name;

  struct Token {
    std::string form;
    bool space_after;
  };
  std::string comment_text;
  bool has_text = false;
  std::vector<Token> tokens;
  std::size_t skip_until = 0;  // last word id covered by a multiword range
  std::size_t block_start = 0;
  bool in_block = false;

  auto flush = [&] {
    if (!in_block) return;
    std::string surface;
    if (has_text) {
      surface = comment_text;
    } else {
      for (std::size_t i = 0; i < tokens.size(); ++i) {
        surface += tokens[i].form;
        if (i + 1 < tokens.size() && tokens[i].space_after) surface += ' ';
      }
    }
    if (!is_blank(surface)) {
      corpus.sentences.push_back(make_sentence(
          std::move(surface), profile, block_start, &corpus.orphan_marks));
    }
    comment_text.clear();
    has_text = false;
    tokens.clear();
    skip_until = 0;
    in_block = false;
  };

  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (line.empty() || is_blank(line)) {
      flush();
      continue;
    }
    if (!in_block) {
      in_block = true;
      block_start = line_no;
    }
    if (line.front() == '#') {
      constexpr std::string_view kText = "# text =";
      if (line.substr(0, kText.size()) == kText) {
        std::string_view value = line.substr(kText.size());
        if (!value.empty() && value.front() == ' ') value.remove_prefix(1);
        comment_text = std::string(value);
        has_text = true;
      }
      continue;
    }
    const auto cols = split_tabs(line);
    if (cols.size() != 10) {
      conllu_error(line_no, "expected 10 tab-separated columns, found " +
                                std::to_string(cols.size()));
    }
    const std::string_view id = cols[0];
    const std::string_view form = cols[1];
    const bool space = !space_after_no(cols[9]);
    if (const auto dash = id.find('-'); dash != std::string_view::npos) {
      std::size_t first = 0;
      std::size_t last = 0;
      if (!parse_index(id.substr(0, dash), first) ||
          !parse_index(id.substr(dash + 1), last) || last < first) {
        conllu_error(line_no, "bad multiword token range '" +
                                  std::string(id) + "'");
      }
      tokens.push_back({std::string(form), space});
      skip_until = last;
      continue;
    }
    if (id.find('.') != std::string_view::npos) {
      std::size_t major = 0;
      if (!parse_index(id.substr(0, id.find('.')), major)) {
        conllu_error(line_no, "bad empty-node id '" + std::string(id) + "'");
      }
      continue;  // empty nodes carry no surface text
    }
    std::size_t word_id = 0;
    if (!parse_index(id, word_id) || word_id == 0) {
      conllu_error(line_no, "bad token id '" + std::string(id) + "'");
    }
    if (word_id <= skip_until) continue;
    tokens.push_back({std::string(form), space});
  }
  flush();
  return corpus;
}

Corpus read_conllu(const std::filesystem::path& path,
                   const ScriptProfile& profile) {
  const std::string text = read_file(path);
  try {
    return parse_conllu(text, profile);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

Corpus read_corpus(const std::filesystem::path& path,
                   const ScriptProfile& profile) {
  const auto ext = path.extension().string();
  if (ext == ".conllu" || ext == ".conll") return read_conllu(path, profile);
  return read_plaintext(path, profile);
}

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Xoshiro256::uniform(std::uint64_t bound) {
  if (bound == 0) throw Error("uniform: zero bound");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Corpus sample(const Corpus& corpus, const SamplingConfig& cfg) {
  if (cfg.target_base_chars == 0) throw Error("sampling target must be > 0");
  if (corpus.rune_count() == 0) throw Error("unsampleable corpus");

  Corpus out;
  out.language_label = corpus.language_label;
  out.family_label = corpus.family_label;
  out.profile_name = corpus.profile_name;

  Xoshiro256 rng(cfg.seed);
  std::vector<std::size_t> order(corpus.sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  shuffle(order, rng);

  std::size_t next = 0;
  std::size_t total = 0;
  while (total < cfg.target_base_chars) {
    if (next == order.size()) {
      shuffle(order, rng);
      next = 0;
    }
    const Sentence& s = corpus.sentences[order[next++]];
    out.sentences.push_back(s);
    total += s.runes.size();
  }
  return out;
}

void write_plaintext(std::ostream& out, const Corpus& corpus) {
  for (const Sentence& s : corpus.sentences) {
    out << encode_utf8(nfd(decode_utf8(s.raw_text))) << '\n';
  }
}

}  // namespace diacritica
