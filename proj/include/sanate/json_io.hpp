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

// JSON and TSV renderings of traces and reports. Key order is fixed, so
// identical inputs serialize to identical bytes.

#pragma once

#include <string>

#include "json.hpp"
#include "sanate/entailment_core.hpp"
#include "sanate/negation_rules.hpp"
#include "sanate/pipeline.hpp"
#include "sanate/sentiment_polarity.hpp"

namespace sanate {

using Json = nlohmann::ordered_json;

inline Json ToJson(const AteTrace& tr) {
  const auto& m = tr.measures;
  Json j;
  j["c"] = m.c;
  j["m"] = m.m;
  j["n"] = m.n;
  j["cos_t"] = m.cos_t;
  j["cos_h"] = m.cos_h;
  j["cos_hut"] = m.cos_hut;
  j["degenerate_length"] = tr.degenerate_length;
  j["length_gate"] = tr.length_gate_passed;
  j["primary_condition"] = tr.primary_condition_passed;
  j["condition4"] = tr.condition4_passed;
  j["condition5"] = tr.condition5_passed;
  j["condition6"] = tr.condition6_passed;
  j["decision"] = DecisionName(tr.decision);
  return j;
}

inline Json ToJson(const NegationAnalysis& a) {
  Json j;
  j["rule"] = NegationRuleName(a.fired_rule);
  j["text_targets"] = a.text_negated_targets;
  j["hyp_targets"] = a.hyp_negated_targets;
  Json common = Json::array();
  for (const auto& ct : a.common_targets) {
    common.push_back({{"text_stem", ct.text_stem},
                      {"hyp_stem", ct.hyp_stem},
                      {"negated_in_text", ct.negated_in_text},
                      {"negated_in_hyp", ct.negated_in_hyp}});
  }
  j["common_targets"] = std::move(common);
  return j;
}

inline Json ToJson(const PolarityResult& p) {
  Json j;
  j["polarity"] = PolarityName(p.polarity);
  j["pos_tf"] = p.pos_tf;
  j["neg_tf"] = p.neg_tf;
  Json words = Json::array();
  for (const auto& w : p.opinion_words) {
    words.push_back(
        {{"word", w.token.normalized},
         {"dictionary",
          w.dictionary == WordPolarity::kPositive ? "positive" : "negative"}});
  }
  j["opinion_words"] = std::move(words);
  return j;
}

inline Json ToJson(const JudgmentTrace& tr) {
  auto opt_decision = [](const std::optional<Decision>& d) {
    return d ? Json(DecisionName(*d)) : Json(nullptr);
  };
  Json j;
  j["mode"] = ModeName(tr.mode);
  j["ate"] = ToJson(tr.ate);
  j["negation"] = tr.negation ? ToJson(*tr.negation) : Json(nullptr);
  j["text_polarity"] =
      tr.text_polarity ? ToJson(*tr.text_polarity) : Json(nullptr);
  j["hyp_polarity"] = tr.hyp_polarity ? ToJson(*tr.hyp_polarity) : Json(nullptr);
  j["stages"] = {{"ate", DecisionName(tr.after_ate)},
                 {"negation", opt_decision(tr.after_negation)},
                 {"sentiment", opt_decision(tr.after_sentiment)}};
  j["final"] = DecisionName(tr.final_decision);
  return j;
}

inline Json ToJson(const EvalReport& r) {
  Json j;
  j["mode"] = ModeName(r.mode);
  j["total"] = r.total;
  j["correct"] = r.correct;
  j["accuracy"] = r.accuracy;
  j["predicted_entail"] = r.predicted_entail;
  j["correct_entail"] = r.correct_entail;
  j["gold_entail"] = r.gold_entail;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["precision_undefined"] = r.precision_undefined;
  j["recall_undefined"] = r.recall_undefined;
  j["degenerate_pairs"] = r.degenerate_pairs;
  Json pairs = Json::array();
  for (const auto& p : r.per_pair) {
    pairs.push_back({{"id", p.id},
                     {"gold", DecisionName(p.gold)},
                     {"predicted", DecisionName(p.predicted)}});
  }
  j["per_pair"] = std::move(pairs);
  return j;
}

// `id<TAB>gold<TAB>predicted`, one line per pair, no header.
inline std::string ToTsv(const EvalReport& r) {
  std::string out;
  for (const auto& p : r.per_pair) {
    out += p.id;
    out += '\t';
    out += DecisionName(p.gold);
    out += '\t';
    out += DecisionName(p.predicted);
    out += '\n';
  }
  return out;
}

}  // namespace sanate
