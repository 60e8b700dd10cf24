// Copyright 2026 The Diacritica Authors
// SPDX-License-Identifier: Apache-2.0

#include "diacritica/rune.h"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "diacritica/unicode.h"
#include "json.hpp"

namespace diacritica {

Rune::Rune(char32_t base_char, std::vector<char32_t> mark_list, bool was_upper)
    : base(base_char), marks(std::move(mark_list)), uppercase(was_upper) {
  canonicalize_marks(marks);
}

bool Rune::has_mark(char32_t mark) const {
  return std::find(marks.begin(), marks.end(), mark) != marks.end();
}

void canonicalize_marks(std::vector<char32_t>& marks) {
  std::sort(marks.begin(), marks.end(), [](char32_t a, char32_t b) {
    const auto ca = combining_class(a);
    const auto cb = combining_class(b);
    return ca != cb ? ca < cb : a < b;
  });
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
}

std::string rune_key(const Rune& rune) {
  std::string key = format_codepoint(rune.base);
  for (char32_t m : rune.marks) {
    key += '+';
    key += format_codepoint(m);
  }
  return key;
}

Rune parse_rune_key(std::string_view key) {
  // Split on '+' that precedes "U+": "U+0061+U+0301".
  std::vector<char32_t> cps;
  std::size_t pos = 0;
  while (pos < key.size()) {
    std::size_t next = key.find("+U+", pos);
    if (next == std::string_view::npos) next = key.size();
    cps.push_back(parse_codepoint(key.substr(pos, next - pos)));
    pos = next == key.size() ? next : next + 1;
  }
  if (cps.empty()) throw Error("empty rune key");
  return Rune(cps.front(), {cps.begin() + 1, cps.end()});
}

bool ScriptProfile::is_diacritic(char32_t cp) const {
  if (extra_mark_allowlist.contains(cp)) return true;
  return is_combining_mark(cp) && !mark_denylist.contains(cp);
}

void validate(const ScriptProfile& profile) {
  for (char32_t cp : profile.extra_mark_allowlist) {
    if (profile.mark_denylist.contains(cp)) {
      throw Error("profile '" + profile.name + "': " + format_codepoint(cp) +
                  " is on both the allowlist and the denylist");
    }
  }
}

ScriptProfile profile_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("profile JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("profile JSON: expected an object");
  ScriptProfile profile;
  profile.name = doc.value("name", std::string("custom"));
  auto read_set = [&](const char* field, std::set<char32_t>& out) {
    if (!doc.contains(field)) return;
    for (const auto& item : doc.at(field)) {
      out.insert(parse_codepoint(item.get<std::string>()));
    }
  };
  try {
    read_set("extra_mark_allowlist", profile.extra_mark_allowlist);
    read_set("mark_denylist", profile.mark_denylist);
    profile.casefold = doc.value("casefold", true);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("profile JSON: ") + e.what());
  }
  validate(profile);
  return profile;
}

std::string profile_to_json(const ScriptProfile& profile) {
  nlohmann::json doc;
  doc["name"] = profile.name;
  auto write_set = [](const std::set<char32_t>& cps) {
    auto arr = nlohmann::json::array();
    for (char32_t cp : cps) arr.push_back(format_codepoint(cp));
    return arr;
  };
  doc["extra_mark_allowlist"] = write_set(profile.extra_mark_allowlist);
  doc["mark_denylist"] = write_set(profile.mark_denylist);
  doc["casefold"] = profile.casefold;
  return doc.dump(2);
}

namespace {

void add_range(std::set<char32_t>& out, char32_t first, char32_t last) {
  for (char32_t cp = first; cp <= last; ++cp) out.insert(cp);
}

}  // namespace

ScriptProfile builtin_profile(std::string_view name) {
  ScriptProfile profile;
  profile.name = std::string(name);
  if (name == "latin-generic") {
    return profile;
  }
  if (name == "hebrew") {
    // Cantillation accents are not part of the pointing system.
    add_range(profile.mark_denylist, 0x0591, 0x05AF);
    return profile;
  }
  if (name == "arabic") {
    // Honorific signs and Quranic annotation marks.
    add_range(profile.mark_denylist, 0x0610, 0x061A);
    add_range(profile.mark_denylist, 0x06D6, 0x06DC);
    add_range(profile.mark_denylist, 0x06DF, 0x06E4);
    add_range(profile.mark_denylist, 0x06E7, 0x06E8);
    add_range(profile.mark_denylist, 0x06EA, 0x06ED);
    return profile;
  }
  if (name == "bengali") {
    return profile;
  }
  throw Error("unknown script profile '" + std::string(name) + "'");
}

std::vector<std::string> builtin_profile_names() {
  return {"latin-generic", "hebrew", "arabic", "bengali"};
}

ScriptProfile load_profile(const std::string& name_or_path) {
  const auto names = builtin_profile_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return builtin_profile(name_or_path);
  }
  std::ifstream in(name_or_path, std::ios::binary);
  if (!in) {
    throw Error("unknown profile '" + name_or_path +
                "' (not a built-in name or readable file)");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return profile_from_json(buf.str());
}

std::u32string normalize_decompose(std::u32string_view text) {
  return nfd(text);
}

SegmentedText segment(std::u32string_view decomposed,
                      const ScriptProfile& profile) {
  SegmentedText out;
  out.roles.resize(decomposed.size(), CharRole::kOther);
  out.rune_of_char.resize(decomposed.size(), SegmentedText::npos);
  bool word_open = false;
  for (std::size_t i = 0; i < decomposed.size(); ++i) {
    const char32_t cp = decomposed[i];
    if (profile.is_diacritic(cp)) {
      if (out.runes.empty()) {
        out.roles[i] = CharRole::kOrphan;
        ++out.orphan_marks;
      } else {
        out.runes.back().marks.push_back(cp);
        out.roles[i] = CharRole::kMark;
        out.rune_of_char[i] = out.runes.size() - 1;
      }
    } else if (is_letter(cp)) {
      if (!word_open) {
        word_open = true;
        ++out.word_count;
      }
      Rune rune;
      if (profile.casefold) {
        rune.base = to_lower(cp);
        rune.uppercase = rune.base != cp;
      } else {
        rune.base = cp;
        rune.uppercase = is_upper(cp);
      }
      out.rune_of_char[i] = out.runes.size();
      out.roles[i] = CharRole::kBase;
      out.runes.push_back(std::move(rune));
      out.word_of_rune.push_back(out.word_count - 1);
    } else if (is_whitespace(cp)) {
      word_open = false;
    }
  }
  for (Rune& rune : out.runes) canonicalize_marks(rune.marks);
  return out;
}

std::vector<Rune> segment_runes(std::u32string_view text,
                                const ScriptProfile& profile,
                                std::size_t* orphans) {
  SegmentedText seg = segment(normalize_decompose(text), profile);
  if (orphans != nullptr) *orphans += seg.orphan_marks;
  return std::move(seg.runes);
}

std::vector<Rune> segment_runes(std::string_view utf8,
                                const ScriptProfile& profile,
                                std::size_t* orphans) {
  return segment_runes(decode_utf8(utf8), profile, orphans);
}

std::vector<Rune> strip(std::span<const Rune> runes) {
  std::vector<Rune> out;
  out.reserve(runes.size());
  for (const Rune& r : runes) out.emplace_back(r.base, std::vector<char32_t>{}, r.uppercase);
  return out;
}

std::u32string strip_text(std::u32string_view text,
                          const ScriptProfile& profile) {
  const std::u32string decomposed = normalize_decompose(text);
  const SegmentedText seg = segment(decomposed, profile);
  std::u32string out;
  out.reserve(decomposed.size());
  for (std::size_t i = 0; i < decomposed.size(); ++i) {
    if (seg.roles[i] == CharRole::kBase || seg.roles[i] == CharRole::kOther) {
      out.push_back(decomposed[i]);
    }
  }
  return out;
}

std::u32string render(std::span<const Rune> runes, RenderForm form) {
  std::u32string out;
  for (const Rune& r : runes) {
    out.push_back(r.uppercase ? to_upper(r.base) : r.base);
    out.append(r.marks.begin(), r.marks.end());
  }
  if (form == RenderForm::kComposed) return nfc(out);
  return out;
}

std::size_t mark_token_count(std::span<const Rune> runes) {
  std::size_t n = 0;
  for (const Rune& r : runes) n += r.marks.size();
  return n;
}

std::size_t RuneHash::operator()(const Rune& rune) const {
  std::size_t h = std::hash<char32_t>{}(rune.base);
  for (char32_t m : rune.marks) {
    h ^= std::hash<char32_t>{}(m) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace diacritica
