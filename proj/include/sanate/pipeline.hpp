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

// Full judgment pipeline (overlap -> negation -> sentiment), JSON-lines
// dataset loading and accuracy/precision/recall evaluation.

#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "sanate/entailment_core.hpp"
#include "sanate/error.hpp"
#include "sanate/lexical_resources.hpp"
#include "sanate/negation_rules.hpp"
#include "sanate/sentiment_polarity.hpp"
#include "sanate/text_normalization.hpp"

namespace sanate {

enum class Mode { kAte, kSanate };

inline std::string_view ModeName(Mode m) {
  return m == Mode::kAte ? "ate" : "sanate";
}

struct PairRecord {
  std::string id;
  std::string text;
  std::string hypothesis;
  std::optional<Decision> gold;
};

struct Settings {
  Thresholds thresholds;
  bool sentiment_promote = false;
};

struct JudgmentTrace {
  Mode mode = Mode::kSanate;
  AteTrace ate;
  // Populated in SANATE mode only.
  std::optional<NegationAnalysis> negation;
  std::optional<PolarityResult> text_polarity;
  std::optional<PolarityResult> hyp_polarity;
  Decision after_ate = Decision::kNotEntails;
  std::optional<Decision> after_negation;
  std::optional<Decision> after_sentiment;
  Decision final_decision = Decision::kNotEntails;
};

inline JudgmentTrace Judge(std::string_view text, std::string_view hypothesis,
                           Mode mode, const Resources& res,
                           const Settings& settings = {}) {
  const ProcessedSentence t =
      ProcessSentence(text, res.stop_list, res.affixes);
  const ProcessedSentence h =
      ProcessSentence(hypothesis, res.stop_list, res.affixes);
  JudgmentTrace tr;
  tr.mode = mode;
  tr.ate = JudgeAte(t, h, res.semantic, settings.thresholds);
  tr.after_ate = tr.ate.decision;
  tr.final_decision = tr.after_ate;
  if (mode == Mode::kAte) return tr;

  tr.negation = AnalyzeNegation(t, h, res.semantic);
  tr.after_negation = AdjustForNegation(tr.after_ate, *tr.negation);
  tr.text_polarity = ClassifyPolarity(t, res.sentiment);
  tr.hyp_polarity = ClassifyPolarity(h, res.sentiment);
  tr.after_sentiment =
      AdjustForSentiment(*tr.after_negation, *tr.text_polarity,
                         *tr.hyp_polarity, settings.sentiment_promote);
  tr.final_decision = *tr.after_sentiment;
  return tr;
}

inline JudgmentTrace Judge(const PairRecord& pair, Mode mode,
                           const Resources& res,
                           const Settings& settings = {}) {
  return Judge(pair.text, pair.hypothesis, mode, res, settings);
}

// ---------------------------------------------------------------------------
// Datasets
// ---------------------------------------------------------------------------

// One JSON object per line: {"id", "text", "hypothesis", "entails"?}.
// Blank lines are skipped; raw text is kept as-is.
inline std::vector<PairRecord> LoadDataset(const std::filesystem::path& path) {
  std::vector<PairRecord> records;
  std::unordered_set<std::string> ids;
  const auto lines = internal::ReadLines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (internal::Trim(lines[i]).empty()) continue;
    auto malformed = [&](const std::string& why) {
      return Error(ErrorCode::kMalformedRecord,
                   path.string() + ":" + std::to_string(line_no) + ": " + why,
                   line_no);
    };
    const auto obj = nlohmann::json::parse(lines[i], nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) throw malformed("not a JSON object");
    PairRecord rec;
    const auto id = obj.find("id");
    if (id == obj.end()) throw malformed("missing \"id\"");
    if (id->is_string()) {
      rec.id = id->get<std::string>();
    } else if (id->is_number_integer()) {
      rec.id = std::to_string(id->get<long long>());
    } else {
      throw malformed("\"id\" must be a string or integer");
    }
    for (auto [key, field] : {std::pair{"text", &rec.text},
                              std::pair{"hypothesis", &rec.hypothesis}}) {
      const auto it = obj.find(key);
      if (it == obj.end() || !it->is_string()) {
        throw malformed(std::string("missing or non-string \"") + key + "\"");
      }
      *field = it->get<std::string>();
      if (internal::Trim(*field).empty()) {
        throw malformed(std::string("empty \"") + key + "\"");
      }
    }
    if (const auto gold = obj.find("entails"); gold != obj.end()) {
      if (!gold->is_boolean()) throw malformed("\"entails\" must be boolean");
      rec.gold = gold->get<bool>() ? Decision::kEntails : Decision::kNotEntails;
    }
    if (!ids.insert(rec.id).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate id '" + rec.id + "'",
                  line_no);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

struct PairOutcome {
  std::string id;
  Decision gold = Decision::kNotEntails;
  Decision predicted = Decision::kNotEntails;
  bool degenerate = false;
};

struct EvalReport {
  Mode mode = Mode::kSanate;
  std::size_t total = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  std::size_t predicted_entail = 0;
  std::size_t correct_entail = 0;
  std::size_t gold_entail = 0;
  double precision = 0.0;
  double recall = 0.0;
  // Zero denominators; the rate is reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
  std::size_t degenerate_pairs = 0;
  std::vector<PairOutcome> per_pair;
};

// Accuracy, precision and recall from per-pair outcomes.
inline EvalReport Tally(Mode mode, std::vector<PairOutcome> outcomes) {
  EvalReport r;
  r.mode = mode;
  r.total = outcomes.size();
  for (const auto& o : outcomes) {
    const bool gold = o.gold == Decision::kEntails;
    const bool pred = o.predicted == Decision::kEntails;
    if (gold == pred) ++r.correct;
    if (pred) ++r.predicted_entail;
    if (gold) ++r.gold_entail;
    if (gold && pred) ++r.correct_entail;
    if (o.degenerate) ++r.degenerate_pairs;
  }
  auto ratio = [](std::size_t num, std::size_t den) {
    return den == 0 ? 0.0
                    : static_cast<double>(num) / static_cast<double>(den);
  };
  r.accuracy = ratio(r.correct, r.total);
  r.precision = ratio(r.correct_entail, r.predicted_entail);
  r.recall = ratio(r.correct_entail, r.gold_entail);
  r.precision_undefined = r.predicted_entail == 0;
  r.recall_undefined = r.gold_entail == 0;
  r.per_pair = std::move(outcomes);
  return r;
}

// Pairs are judged independently over `threads` workers; the report keeps
// dataset order. Throws Error(kMissingGoldLabel) before judging anything
// if a record has no gold label.
inline EvalReport Evaluate(const std::vector<PairRecord>& records, Mode mode,
                           const Resources& res, const Settings& settings = {},
                           unsigned threads = 1) {
  for (const auto& rec : records) {
    if (!rec.gold) {
      throw Error(ErrorCode::kMissingGoldLabel, "record '" + rec.id + "'");
    }
  }
  std::vector<PairOutcome> outcomes(records.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const JudgmentTrace tr = Judge(records[i], mode, res, settings);
      outcomes[i] = {records[i].id, *records[i].gold, tr.final_decision,
                     tr.ate.degenerate_length};
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || records.size() < 2) {
    work(0, records.size());
  } else {
    const std::size_t chunk = (records.size() + threads - 1) / threads;
    std::vector<std::jthread> pool;
    for (std::size_t b = 0; b < records.size(); b += chunk) {
      pool.emplace_back(work, b, std::min(records.size(), b + chunk));
    }
  }
  return Tally(mode, std::move(outcomes));
}

}  // namespace sanate
