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

// Semantic-relation lexicon (a flat stand-in for a WordNet-style resource)
// and the positive/negative sentiment dictionaries.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "sanate/error.hpp"
#include "sanate/text_normalization.hpp"

namespace sanate {

// Symmetric word relation. Keys and values are normalized forms or stems.
class SemanticLexicon {
 public:
  SemanticLexicon() = default;

  // `headword<TAB>rel1,rel2,...` per line, `#` comments. Every pair is
  // related both as normalized words and as stems.
  static SemanticLexicon Load(const std::filesystem::path& path,
                              const AffixTable& affixes = AffixTable::Default());

  // Records a symmetric relation between two already-normalized keys.
  // Self-relations are dropped.
  void Relate(std::string_view a, std::string_view b) {
    if (a == b || a.empty() || b.empty()) return;
    entries_[std::string(a)].emplace(b);
    entries_[std::string(b)].emplace(a);
  }

  const std::set<std::string>& Related(std::string_view word) const {
    static const std::set<std::string> kEmpty;
    auto it = entries_.find(std::string(word));
    return it == entries_.end() ? kEmpty : it->second;
  }

  bool AreRelated(std::string_view a, std::string_view b) const {
    return Related(a).count(std::string(b)) > 0;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const std::unordered_map<std::string, std::set<std::string>>& entries()
      const {
    return entries_;
  }

 private:
  std::unordered_map<std::string, std::set<std::string>> entries_;
};

namespace internal {

inline std::vector<std::string_view> SplitOn(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

inline std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace internal

inline SemanticLexicon SemanticLexicon::Load(const std::filesystem::path& path,
                                             const AffixTable& affixes) {
  SemanticLexicon lex;
  const auto lines = internal::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = internal::Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    auto malformed = [&] {
      return Error(ErrorCode::kMalformedLine,
                   path.string() + ":" + std::to_string(line_no), line_no);
    };
    const auto fields = internal::SplitOn(line, '\t');
    if (fields.size() != 2) throw malformed();
    const std::string head = Normalize(internal::Trim(fields[0]));
    if (head.empty()) throw malformed();
    const std::string head_stem = LightStem(head, affixes);
    for (std::string_view item : internal::SplitOn(fields[1], ',')) {
      const std::string rel = Normalize(internal::Trim(item));
      if (rel.empty()) throw malformed();
      lex.Relate(head, rel);
      lex.Relate(head_stem, LightStem(rel, affixes));
    }
  }
  return lex;
}

enum class WordPolarity { kNone, kPositive, kNegative };

// PD / ND split of an opinion lexicon. The two sets are disjoint.
class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  // Words present in both inputs are dropped from both and counted in
  // conflict_count().
  static SentimentLexicon FromWords(
      const std::vector<std::string>& positive,
      const std::vector<std::string>& negative,
      const AffixTable& affixes = AffixTable::Default()) {
    SentimentLexicon lex;
    lex.affixes_ = affixes;
    for (const auto& w : positive) lex.AddNormalized(lex.positive_, w);
    for (const auto& w : negative) lex.AddNormalized(lex.negative_, w);
    lex.DropConflicts();
    return lex;
  }

  // Two-column `word,polarity` CSV; polarity is `positive` or `negative`
  // in any case. An optional `...,polarity` header row is skipped.
  static SentimentLexicon SplitCombined(
      const std::filesystem::path& path,
      const AffixTable& affixes = AffixTable::Default());

  // Pre-split dictionaries, one word per line.
  static SentimentLexicon LoadSplit(
      const std::filesystem::path& positive_path,
      const std::filesystem::path& negative_path,
      const AffixTable& affixes = AffixTable::Default()) {
    auto read_words = [](const std::filesystem::path& p) {
      std::vector<std::string> words;
      for (const auto& raw : internal::ReadLines(p)) {
        const std::string_view line = internal::Trim(raw);
        if (!line.empty() && line.front() != '#') words.emplace_back(line);
      }
      return words;
    };
    return FromWords(read_words(positive_path), read_words(negative_path),
                     affixes);
  }

  // Exact normalized form is tried against both dictionaries before the
  // stem is.
  WordPolarity PolarityOf(std::string_view normalized,
                          std::string_view stem) const {
    if (const auto p = Lookup(normalized); p != WordPolarity::kNone) return p;
    return Lookup(stem);
  }

  WordPolarity PolarityOf(std::string_view normalized) const {
    return PolarityOf(normalized, LightStem(normalized, affixes_));
  }

  WordPolarity PolarityOf(const Token& token) const {
    return PolarityOf(token.normalized, token.stem);
  }

  const std::unordered_set<std::string>& positive() const { return positive_; }
  const std::unordered_set<std::string>& negative() const { return negative_; }
  std::size_t conflict_count() const { return conflicts_; }

  // PD and ND exchanged.
  SentimentLexicon Swapped() const {
    SentimentLexicon out = *this;
    std::swap(out.positive_, out.negative_);
    return out;
  }

 private:
  WordPolarity Lookup(std::string_view word) const {
    const std::string key(word);
    if (positive_.count(key)) return WordPolarity::kPositive;
    if (negative_.count(key)) return WordPolarity::kNegative;
    return WordPolarity::kNone;
  }

  static void AddNormalized(std::unordered_set<std::string>& set,
                            std::string_view word) {
    std::string n = Normalize(word);
    if (!n.empty()) set.insert(std::move(n));
  }

  void DropConflicts() {
    std::vector<std::string> both;
    for (const auto& w : positive_) {
      if (negative_.count(w)) both.push_back(w);
    }
    for (const auto& w : both) {
      positive_.erase(w);
      negative_.erase(w);
    }
    conflicts_ = both.size();
  }

  std::unordered_set<std::string> positive_;
  std::unordered_set<std::string> negative_;
  std::size_t conflicts_ = 0;
  AffixTable affixes_ = AffixTable::Default();
};

inline SentimentLexicon SentimentLexicon::SplitCombined(
    const std::filesystem::path& path, const AffixTable& affixes) {
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  const auto lines = internal::ReadLines(path);
  bool first_row = true;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t row = i + 1;
    const std::string_view line = internal::Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto cols = internal::SplitOn(line, ',');
    auto unquote = [](std::string_view f) {
      f = internal::Trim(f);
      if (f.size() >= 2 && f.front() == '"' && f.back() == '"') {
        f = f.substr(1, f.size() - 2);
      }
      return internal::Trim(f);
    };
    if (cols.size() != 2 || unquote(cols[0]).empty()) {
      throw Error(ErrorCode::kMalformedRow,
                  path.string() + ": row " + std::to_string(row), row);
    }
    const std::string word(unquote(cols[0]));
    const std::string label = internal::Lower(unquote(cols[1]));
    const bool header = first_row && label == "polarity";
    first_row = false;
    if (header) continue;
    if (label == "positive") {
      positive.push_back(word);
    } else if (label == "negative") {
      negative.push_back(word);
    } else {
      throw Error(ErrorCode::kUnknownPolarityLabel,
                  path.string() + ": row " + std::to_string(row) +
                      ", label '" + label + "'",
                  row);
    }
  }
  return FromWords(positive, negative, affixes);
}

}  // namespace sanate

namespace sanate {

// Everything the judging pipeline reads. Immutable once loaded.
struct Resources {
  StopList stop_list;
  AffixTable affixes = AffixTable::Default();
  SemanticLexicon semantic;
  SentimentLexicon sentiment;
};

}  // namespace sanate
