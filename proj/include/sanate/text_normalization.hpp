// Copyright 2026 The SANATE Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Arabic orthographic normalization, tokenization, light stemming and
// stop-word / negation-particle tagging.

#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sanate/error.hpp"
#include "sanate/utf8.hpp"

namespace sanate {

// ---------------------------------------------------------------------------
// Character classes
// ---------------------------------------------------------------------------

namespace chars {

inline constexpr char32_t kAlef = 0x0627;
inline constexpr char32_t kAlefMadda = 0x0622;
inline constexpr char32_t kAlefHamzaAbove = 0x0623;
inline constexpr char32_t kAlefHamzaBelow = 0x0625;
inline constexpr char32_t kAlefMaksura = 0x0649;
inline constexpr char32_t kYeh = 0x064A;
inline constexpr char32_t kTehMarbuta = 0x0629;
inline constexpr char32_t kHeh = 0x0647;
inline constexpr char32_t kTatweel = 0x0640;
inline constexpr char32_t kMaddaAbove = 0x0653;
inline constexpr char32_t kHamzaAbove = 0x0654;
inline constexpr char32_t kHamzaBelow = 0x0655;

// Tashkeel, Quranic annotation marks and superscript alef.
inline constexpr bool IsDiacritic(char32_t c) {
  return (c >= 0x0610 && c <= 0x061A) || (c >= 0x064B && c <= 0x065F) ||
         c == 0x0670 || (c >= 0x06D6 && c <= 0x06DC) ||
         (c >= 0x06DF && c <= 0x06E4) || c == 0x06E7 || c == 0x06E8 ||
         (c >= 0x06EA && c <= 0x06ED);
}

inline constexpr bool IsSpace(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 ||
         c == 0x1680 || (c >= 0x2000 && c <= 0x200A) || c == 0x2028 ||
         c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000 ||
         c == 0xFEFF;
}

inline constexpr bool IsPunct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  return c == 0xA1 || c == 0xA7 || c == 0xAB || c == 0xB6 || c == 0xB7 ||
         c == 0xBB || c == 0xBF || (c >= 0x2010 && c <= 0x2027) ||
         (c >= 0x2030 && c <= 0x205E) || c == 0x060C || c == 0x060D ||
         c == 0x061B || c == 0x061E || c == 0x061F ||
         (c >= 0x066A && c <= 0x066D) || c == 0x06D4 || c == 0xFD3E ||
         c == 0xFD3F || c == utf8::kReplacement;
}

// Canonical composition of an Arabic base letter with a following
// madda/hamza mark. Returns 0 when the pair has no precomposed form.
inline constexpr char32_t ComposeArabic(char32_t base, char32_t mark) {
  switch (mark) {
    case kMaddaAbove:
      return base == kAlef ? kAlefMadda : 0;
    case kHamzaAbove:
      switch (base) {
        case kAlef: return kAlefHamzaAbove;
        case 0x0648: return 0x0624;
        case kYeh: return 0x0626;
        case 0x06D5: return 0x06C0;
        case 0x06C1: return 0x06C2;
        case 0x06D2: return 0x06D3;
        default: return 0;
      }
    case kHamzaBelow:
      return base == kAlef ? kAlefHamzaBelow : 0;
    default:
      return 0;
  }
}

}  // namespace chars

// The five negation particles, in normalized form.
inline constexpr std::array<std::string_view, 5> kNegationParticles = {
    "ما", "لا", "لم", "لن", "ليس"};

inline bool IsNegationParticle(std::string_view normalized) {
  return std::find(kNegationParticles.begin(), kNegationParticles.end(),
                   normalized) != kNegationParticles.end();
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

namespace internal {

// Composes base+mark pairs in the Arabic block. Only marks with a lower
// combining class (the harakat) may sit between base and hamza/madda.
inline std::u32string ComposeArabicMarks(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char32_t base = in[i];
    std::size_t j = i + 1;
    while (j < in.size() && in[j] >= 0x064B && in[j] <= 0x0652) ++j;
    if (j < in.size()) {
      if (const char32_t composed = chars::ComposeArabic(base, in[j])) {
        out.push_back(composed);
        out.append(in.substr(i + 1, j - i - 1));
        i = j;
        continue;
      }
    }
    out.push_back(base);
  }
  return out;
}

inline char32_t FoldLetter(char32_t c) {
  switch (c) {
    case chars::kAlefHamzaAbove:
    case chars::kAlefHamzaBelow:
    case chars::kAlefMadda:
      return chars::kAlef;
    case chars::kAlefMaksura:
      return chars::kYeh;
    case chars::kTehMarbuta:
      return chars::kHeh;
    default:
      return c;
  }
}

// Composition, diacritic/tatweel removal and letter folding, without any
// whitespace handling.
inline std::u32string NormalizeLetters(std::u32string_view in) {
  std::u32string composed = ComposeArabicMarks(in);
  std::u32string out;
  out.reserve(composed.size());
  for (char32_t c : composed) {
    if (chars::IsDiacritic(c) || c == chars::kTatweel) continue;
    out.push_back(FoldLetter(c));
  }
  return out;
}

}  // namespace internal

inline std::string Normalize(std::string_view raw) {
  const std::u32string letters =
      internal::NormalizeLetters(utf8::Decode(raw));
  std::u32string out;
  out.reserve(letters.size());
  bool pending_space = false;
  for (char32_t c : letters) {
    if (chars::IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return utf8::Encode(out);
}

// ---------------------------------------------------------------------------
// Affix tables and light stemming
// ---------------------------------------------------------------------------

class AffixTable {
 public:
  AffixTable(std::vector<std::string> prefixes,
             std::vector<std::string> suffixes)
      : prefixes_(Prepare(std::move(prefixes))),
        suffixes_(Prepare(std::move(suffixes))) {}

  static const AffixTable& Default() {
    static const AffixTable table(
        {"ال", "وال", "بال", "كال", "فال", "لل", "و"},
        {"ها", "ان", "ات", "ون", "ين", "يه", "ية", "ه", "ي", "ة"});
    return table;
  }

  // Sections `[prefixes]` and `[suffixes]`, one affix per line, `#` comments.
  // A section missing from the file keeps the default list.
  static AffixTable Load(const std::filesystem::path& path);

  // Longest first; ties keep configured order.
  const std::vector<std::u32string>& prefixes() const { return prefixes_; }
  const std::vector<std::u32string>& suffixes() const { return suffixes_; }

 private:
  static std::vector<std::u32string> Prepare(std::vector<std::string> raw) {
    std::vector<std::u32string> out;
    for (const auto& a : raw) {
      std::u32string n = internal::NormalizeLetters(utf8::Decode(a));
      if (n.empty()) continue;
      if (std::find(out.begin(), out.end(), n) == out.end()) {
        out.push_back(std::move(n));
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                       return a.size() > b.size();
                     });
    return out;
  }

  std::vector<std::u32string> prefixes_;
  std::vector<std::u32string> suffixes_;
};

inline constexpr std::size_t kMinStemLength = 2;

// Strips at most one prefix and then at most one suffix. An affix is only
// removed when at least kMinStemLength code points remain.
inline std::string LightStem(std::string_view word,
                             const AffixTable& table = AffixTable::Default()) {
  std::u32string w = utf8::Decode(word);
  for (const auto& p : table.prefixes()) {
    if (w.size() >= p.size() + kMinStemLength &&
        std::u32string_view(w).substr(0, p.size()) == p) {
      w.erase(0, p.size());
      break;
    }
  }
  for (const auto& s : table.suffixes()) {
    if (w.size() >= s.size() + kMinStemLength &&
        std::u32string_view(w).substr(w.size() - s.size()) == s) {
      w.erase(w.size() - s.size());
      break;
    }
  }
  return utf8::Encode(w);
}

// ---------------------------------------------------------------------------
// Line-oriented resource files
// ---------------------------------------------------------------------------

namespace internal {

inline std::ifstream OpenForRead(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  }
  return in;
}

inline std::string_view Trim(std::string_view s) {
  constexpr std::string_view kWs = " \t\r\n\v\f";
  const auto b = s.find_first_not_of(kWs);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kWs);
  return s.substr(b, e - b + 1);
}

// Reads all lines, dropping a UTF-8 BOM and trailing CR.
inline std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in = OpenForRead(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (lines.empty() && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIoFailure, "read failed: " + path.string());
  }
  return lines;
}

}  // namespace internal

inline AffixTable AffixTable::Load(const std::filesystem::path& path) {
  const AffixTable& defaults = Default();
  auto to_utf8 = [](const std::vector<std::u32string>& v) {
    std::vector<std::string> out;
    for (const auto& a : v) out.push_back(utf8::Encode(a));
    return out;
  };
  std::vector<std::string> prefixes = to_utf8(defaults.prefixes());
  std::vector<std::string> suffixes = to_utf8(defaults.suffixes());
  std::vector<std::string>* current = nullptr;
  const auto lines = internal::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = internal::Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    if (line == "[prefixes]") {
      prefixes.clear();
      current = &prefixes;
    } else if (line == "[suffixes]") {
      suffixes.clear();
      current = &suffixes;
    } else if (line.front() == '[' || current == nullptr ||
               line.find_first_of(" \t") != std::string_view::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  path.string() + ":" + std::to_string(i + 1), i + 1);
    } else {
      current->emplace_back(line);
    }
  }
  return AffixTable(std::move(prefixes), std::move(suffixes));
}

// ---------------------------------------------------------------------------
// Stop list
// ---------------------------------------------------------------------------

class StopList {
 public:
  StopList() = default;
  StopList(std::initializer_list<std::string_view> words) {
    for (auto w : words) Add(w);
  }

  // One word per line, `#` comments. Entries are normalized on load.
  static StopList Load(const std::filesystem::path& path) {
    StopList list;
    for (const auto& raw : internal::ReadLines(path)) {
      const std::string_view line = internal::Trim(raw);
      if (line.empty() || line.front() == '#') continue;
      list.Add(line);
    }
    return list;
  }

  void Add(std::string_view word) {
    std::string n = Normalize(word);
    if (!n.empty()) words_.insert(std::move(n));
  }

  bool Contains(std::string_view normalized) const {
    return words_.find(std::string(normalized)) != words_.end();
  }

  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// ---------------------------------------------------------------------------
// Tokens and processed sentences
// ---------------------------------------------------------------------------

struct Token {
  std::string surface;
  std::string normalized;
  std::string stem;
  std::size_t position = 0;
  bool is_negation_particle = false;
  bool is_stop_word = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct NegationPair {
  Token particle;
  Token target;
};

struct ProcessedSentence {
  std::string raw;
  std::vector<Token> all_tokens;
  // Stop words and negation particles removed.
  std::vector<Token> content_tokens;
  // Each particle with the token at the next position; a sentence-final
  // particle has no entry.
  std::vector<NegationPair> negations;
};

namespace internal {

inline std::vector<std::u32string> SplitPieces(std::u32string_view text) {
  std::vector<std::u32string> pieces;
  std::u32string cur;
  for (char32_t c : text) {
    if (chars::IsSpace(c) || chars::IsPunct(c)) {
      if (!cur.empty()) pieces.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) pieces.push_back(std::move(cur));
  return pieces;
}

}  // namespace internal

// Splits on whitespace and punctuation. Stop-word flags are only set when a
// stop list is supplied; negation particles are never stop words.
inline std::vector<Token> Tokenize(
    std::string_view text, const StopList* stop_list = nullptr,
    const AffixTable& affixes = AffixTable::Default()) {
  std::vector<Token> tokens;
  for (const auto& piece : internal::SplitPieces(utf8::Decode(text))) {
    std::string normalized =
        utf8::Encode(internal::NormalizeLetters(piece));
    if (normalized.empty()) continue;
    Token tok;
    tok.surface = utf8::Encode(piece);
    tok.stem = LightStem(normalized, affixes);
    tok.position = tokens.size();
    tok.is_negation_particle = IsNegationParticle(normalized);
    tok.is_stop_word = !tok.is_negation_particle && stop_list != nullptr &&
                       (stop_list->Contains(normalized) ||
                        stop_list->Contains(tok.stem));
    tok.normalized = std::move(normalized);
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

inline ProcessedSentence ProcessSentence(
    std::string_view raw, const StopList& stop_list,
    const AffixTable& affixes = AffixTable::Default()) {
  ProcessedSentence out;
  out.raw = std::string(raw);
  out.all_tokens = Tokenize(raw, &stop_list, affixes);
  const auto& all = out.all_tokens;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Token& tok = all[i];
    if (tok.is_negation_particle) {
      if (i + 1 < all.size()) out.negations.push_back({tok, all[i + 1]});
    } else if (!tok.is_stop_word) {
      out.content_tokens.push_back(tok);
    }
  }
  return out;
}

}  // namespace sanate
