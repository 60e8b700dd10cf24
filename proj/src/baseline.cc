// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/baseline.h"

#include <cstdio>
#include <unordered_map>

#include "diacritica/unicode.h"
#include "json.hpp"

namespace diacritica {

namespace {

std::u32string decomposed_form(std::span<const Rune> runes) {
  std::u32string out;
  for (const Rune& r : runes) {
    out.push_back(r.base);
    out.append(r.marks.begin(), r.marks.end());
  }
  return out;
}

std::u32string base_sequence(std::span<const Rune> runes) {
  std::u32string out;
  out.reserve(runes.size());
  for (const Rune& r : runes) out.push_back(r.base);
  return out;
}

// Picks the modal key; ties by smallest decomposed codepoint sequence, which
// is the map order of the keys.
template <typename Value>
const Value& modal(const std::map<std::u32string,
                                  std::pair<Value, std::int64_t>>& counts) {
  const std::pair<Value, std::int64_t>* best = nullptr;
  for (const auto& [form, entry] : counts) {
    if (best == nullptr || entry.second > best->second) best = &entry;
  }
  return best->first;
}

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BaselineModel train(const Corpus& corpus) {
  using Forms = std::map<std::u32string, std::pair<std::vector<Rune>, std::int64_t>>;
  using CharForms = std::map<std::u32string, std::pair<Rune, std::int64_t>>;
  std::map<std::u32string, Forms> words;
  std::map<char32_t, CharForms> chars;
  std::string digest_input;

  for (const Sentence& s : corpus.sentences) {
    digest_input += encode_utf8(nfd(decode_utf8(s.raw_text)));
    digest_input += '\n';
    std::size_t begin = 0;
    while (begin < s.runes.size()) {
      std::size_t end = begin;
      while (end < s.runes.size() && s.word_of_rune[end] == s.word_of_rune[begin]) {
        ++end;
      }
      std::vector<Rune> word;
      for (std::size_t i = begin; i < end; ++i) {
        word.emplace_back(s.runes[i].base, s.runes[i].marks);
      }
      auto& slot = words[base_sequence(word)][decomposed_form(word)];
      if (slot.second == 0) slot.first = word;
      ++slot.second;
      begin = end;
    }
    for (const Rune& r : s.runes) {
      auto& slot = chars[r.base][decomposed_form(std::span(&r, 1))];
      if (slot.second == 0) slot.first = Rune(r.base, r.marks);
      ++slot.second;
    }
  }

  BaselineModel model;
  model.profile_name = corpus.profile_name;
  model.corpus_digest = fnv1a64_hex(digest_input);
  for (const auto& [key, forms] : words) model.word_map[key] = modal(forms);
  for (const auto& [base, forms] : chars) model.char_map[base] = modal(forms);
  return model;
}

std::u32string diacritize(const BaselineModel& model, std::u32string_view text,
                          const ScriptProfile& profile) {
  const std::u32string decomposed = nfd(text);
  const SegmentedText seg = segment(decomposed, profile);

  // Predicted marks per rune.
  std::vector<const std::vector<char32_t>*> predicted(seg.runes.size(), nullptr);
  static const std::vector<char32_t> kNone;
  std::size_t begin = 0;
  while (begin < seg.runes.size()) {
    std::size_t end = begin;
    while (end < seg.runes.size() &&
           seg.word_of_rune[end] == seg.word_of_rune[begin]) {
      ++end;
    }
    std::u32string key;
    for (std::size_t i = begin; i < end; ++i) key.push_back(seg.runes[i].base);
    if (const auto it = model.word_map.find(key); it != model.word_map.end()) {
      for (std::size_t i = begin; i < end; ++i) {
        predicted[i] = &it->second[i - begin].marks;
      }
    } else {
      for (std::size_t i = begin; i < end; ++i) {
        const auto c = model.char_map.find(seg.runes[i].base);
        predicted[i] = c == model.char_map.end() ? &kNone : &c->second.marks;
      }
    }
    begin = end;
  }

  std::u32string out;
  out.reserve(decomposed.size() + seg.runes.size());
  for (std::size_t i = 0; i < decomposed.size(); ++i) {
    switch (seg.roles[i]) {
      case CharRole::kBase: {
        out.push_back(decomposed[i]);
        const auto* marks = predicted[seg.rune_of_char[i]];
        out.append(marks->begin(), marks->end());
        break;
      }
      case CharRole::kMark:
      case CharRole::kOrphan:
        break;
      case CharRole::kOther:
        out.push_back(decomposed[i]);
        break;
    }
  }
  return nfd(out);
}

std::string diacritize(const BaselineModel& model, std::string_view utf8,
                       const ScriptProfile& profile) {
  return encode_utf8(diacritize(model, decode_utf8(utf8), profile));
}

std::string model_to_json(const BaselineModel& model) {
  nlohmann::ordered_json doc;
  doc["format_version"] = BaselineModel::kFormatVersion;
  doc["meta"] = {{"profile", model.profile_name},
                 {"casefold", model.casefold},
                 {"corpus_digest", model.corpus_digest}};
  auto& words = doc["word_map"] = nlohmann::ordered_json::object();
  for (const auto& [key, runes] : model.word_map) {
    words[encode_utf8(key)] = encode_utf8(decomposed_form(runes));
  }
  auto& chars = doc["char_map"] = nlohmann::ordered_json::object();
  for (const auto& [base, rune] : model.char_map) {
    chars[encode_utf8(std::u32string(1, base))] =
        encode_utf8(decomposed_form(std::span(&rune, 1)));
  }
  // ensure_ascii: keys and values are written as \uXXXX escapes.
  return doc.dump(2, ' ', true);
}

namespace {

std::vector<Rune> parse_form(const std::string& utf8) {
  // Raw codepoints, no profile: every non-first codepoint of a rune is a mark.
  const std::u32string cps = decode_utf8(utf8);
  std::vector<Rune> runes;
  for (char32_t cp : cps) {
    if (is_letter(cp) && !is_combining_mark(cp)) {
      runes.emplace_back(cp, std::vector<char32_t>{});
    } else if (!runes.empty()) {
      runes.back().marks.push_back(cp);
    } else {
      throw Error("model: form starts with a mark");
    }
  }
  for (Rune& r : runes) canonicalize_marks(r.marks);
  return runes;
}

}  // namespace

BaselineModel model_from_json(std::string_view json_text) {
  BaselineModel model;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (doc.value("format_version", 0) != BaselineModel::kFormatVersion) {
      throw Error("model: unsupported format_version");
    }
    const auto& meta = doc.at("meta");
    model.profile_name = meta.value("profile", std::string());
    model.casefold = meta.value("casefold", true);
    model.corpus_digest = meta.value("corpus_digest", std::string());
    for (const auto& [key, value] : doc.at("word_map").items()) {
      std::vector<Rune> form = parse_form(value.get<std::string>());
      const std::u32string k = decode_utf8(key);
      if (base_sequence(form) != k) {
        throw Error("model: word_map entry does not strip to its key '" + key + "'");
      }
      model.word_map.emplace(k, std::move(form));
    }
    for (const auto& [key, value] : doc.at("char_map").items()) {
      const std::u32string k = decode_utf8(key);
      std::vector<Rune> form = parse_form(value.get<std::string>());
      if (k.size() != 1 || form.size() != 1 || form.front().base != k.front()) {
        throw Error("model: bad char_map entry '" + key + "'");
      }
      model.char_map.emplace(k.front(), std::move(form.front()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("model: ") + e.what());
  }
  return model;
}

}  // namespace diacritica
