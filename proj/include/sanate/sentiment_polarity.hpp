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

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "sanate/entailment_core.hpp"
#include "sanate/lexical_resources.hpp"
#include "sanate/text_normalization.hpp"

namespace sanate {

enum class Polarity { kPositive, kNegative, kNeutral, kNoOpinion };

inline std::string_view PolarityName(Polarity p) {
  switch (p) {
    case Polarity::kPositive: return "positive";
    case Polarity::kNegative: return "negative";
    case Polarity::kNeutral: return "neutral";
    case Polarity::kNoOpinion: return "no_opinion";
  }
  return "?";
}

struct OpinionWord {
  Token token;
  WordPolarity dictionary = WordPolarity::kNone;
};

struct PolarityResult {
  Polarity polarity = Polarity::kNoOpinion;
  std::size_t pos_tf = 0;
  std::size_t neg_tf = 0;
  std::vector<OpinionWord> opinion_words;
};

// Term-frequency vote. Counts the algorithm leaves unlabeled (a single
// opinion word, or none) map to NoOpinion.
inline constexpr Polarity LabelFromCounts(std::size_t pos_tf,
                                          std::size_t neg_tf) {
  if (pos_tf >= 2 && pos_tf > neg_tf) return Polarity::kPositive;
  if (neg_tf >= 2 && pos_tf < neg_tf) return Polarity::kNegative;
  if (pos_tf == neg_tf && pos_tf != 0) return Polarity::kNeutral;
  return Polarity::kNoOpinion;
}

// Scans every token, stop words and particles included. Repeated opinion
// words count each time.
inline PolarityResult ClassifyPolarity(const ProcessedSentence& sentence,
                                       const SentimentLexicon& lex) {
  PolarityResult out;
  for (const Token& tok : sentence.all_tokens) {
    const WordPolarity wp = lex.PolarityOf(tok);
    if (wp == WordPolarity::kNone) continue;
    if (wp == WordPolarity::kPositive) {
      ++out.pos_tf;
    } else {
      ++out.neg_tf;
    }
    out.opinion_words.push_back({tok, wp});
  }
  out.polarity = LabelFromCounts(out.pos_tf, out.neg_tf);
  return out;
}

// Polarity compatibility check. Only applies when both sentences carry
// opinion words and both got a label. With `promote` set, agreeing
// polarities also lift a NotEntails decision.
inline Decision AdjustForSentiment(Decision decision,
                                   const PolarityResult& text,
                                   const PolarityResult& hyp,
                                   bool promote = false) {
  const bool applicable = !text.opinion_words.empty() &&
                          !hyp.opinion_words.empty() &&
                          text.polarity != Polarity::kNoOpinion &&
                          hyp.polarity != Polarity::kNoOpinion;
  if (!applicable) return decision;
  const bool same = text.polarity == hyp.polarity;
  if (decision == Decision::kEntails) {
    return same ? Decision::kEntails : Decision::kNotEntails;
  }
  return promote && same ? Decision::kEntails : Decision::kNotEntails;
}

}  // namespace sanate
