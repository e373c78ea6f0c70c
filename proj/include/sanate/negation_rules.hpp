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

// Negation veto. The "verb" negated by a particle is the token right after
// it; a negated target is "common" when it matches (same stem or lexicon
// relation) a token of the other sentence.
//
//   NoParticles  no negated target anywhere            -> unchanged
//   R1           one common target, negated one side   -> not entails
//   R2           one common target, negated both sides -> entails
//   R3           targets exist but none is common      -> not entails
//   R4a          several common targets, any one-sided -> not entails
//   R4b          several common targets, all two-sided -> entails
//
// A decision of NotEntails is never re-examined.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sanate/entailment_core.hpp"
#include "sanate/lexical_resources.hpp"
#include "sanate/text_normalization.hpp"

namespace sanate {

enum class NegationRule { kNoParticles, kR1, kR2, kR3, kR4a, kR4b };

inline std::string_view NegationRuleName(NegationRule r) {
  switch (r) {
    case NegationRule::kNoParticles: return "NoParticles";
    case NegationRule::kR1: return "R1";
    case NegationRule::kR2: return "R2";
    case NegationRule::kR3: return "R3";
    case NegationRule::kR4a: return "R4a";
    case NegationRule::kR4b: return "R4b";
  }
  return "?";
}

// A negated target that also occurs in the other sentence. The stem on the
// non-negated side is the stem of the matching token there.
struct CommonTarget {
  std::string text_stem;
  std::string hyp_stem;
  bool negated_in_text = false;
  bool negated_in_hyp = false;

  bool two_sided() const { return negated_in_text && negated_in_hyp; }
};

struct NegationAnalysis {
  std::set<std::string> text_negated_targets;
  std::set<std::string> hyp_negated_targets;
  std::vector<CommonTarget> common_targets;
  NegationRule fired_rule = NegationRule::kNoParticles;
};

namespace internal {

inline const Token* FindMatch(const Token& target,
                              const std::vector<Token>& tokens,
                              const SemanticLexicon& lex,
                              bool skip_particles) {
  for (const Token& tok : tokens) {
    if (skip_particles && tok.is_negation_particle) continue;
    if (WordsMatch(target, tok, lex)) return &tok;
  }
  return nullptr;
}

inline std::vector<Token> Targets(const ProcessedSentence& s) {
  std::vector<Token> out;
  std::set<std::string> seen;
  for (const auto& neg : s.negations) {
    if (seen.insert(neg.target.stem).second) out.push_back(neg.target);
  }
  return out;
}

}  // namespace internal

inline NegationAnalysis AnalyzeNegation(const ProcessedSentence& text,
                                        const ProcessedSentence& hyp,
                                        const SemanticLexicon& lex) {
  NegationAnalysis out;
  const std::vector<Token> text_targets = internal::Targets(text);
  const std::vector<Token> hyp_targets = internal::Targets(hyp);
  for (const Token& t : text_targets) out.text_negated_targets.insert(t.stem);
  for (const Token& h : hyp_targets) out.hyp_negated_targets.insert(h.stem);

  for (const Token& t : text_targets) {
    const Token* negated = internal::FindMatch(t, hyp_targets, lex, false);
    const Token* present =
        negated ? negated : internal::FindMatch(t, hyp.all_tokens, lex, true);
    if (present == nullptr) continue;
    out.common_targets.push_back(
        {t.stem, present->stem, true, negated != nullptr});
  }
  for (const Token& h : hyp_targets) {
    if (internal::FindMatch(h, text_targets, lex, false)) continue;
    const Token* present = internal::FindMatch(h, text.all_tokens, lex, true);
    if (present == nullptr) continue;
    out.common_targets.push_back({present->stem, h.stem, false, true});
  }

  if (text_targets.empty() && hyp_targets.empty()) {
    out.fired_rule = NegationRule::kNoParticles;
  } else if (out.common_targets.empty()) {
    out.fired_rule = NegationRule::kR3;
  } else {
    bool any_one_sided = false;
    for (const auto& ct : out.common_targets) {
      if (!ct.two_sided()) any_one_sided = true;
    }
    const bool several = out.common_targets.size() > 1;
    if (any_one_sided) {
      out.fired_rule = several ? NegationRule::kR4a : NegationRule::kR1;
    } else {
      out.fired_rule = several ? NegationRule::kR4b : NegationRule::kR2;
    }
  }
  return out;
}

inline Decision AdjustForNegation(Decision ate_decision,
                                  const NegationAnalysis& analysis) {
  if (ate_decision == Decision::kNotEntails) return Decision::kNotEntails;
  switch (analysis.fired_rule) {
    case NegationRule::kR1:
    case NegationRule::kR3:
    case NegationRule::kR4a:
      return Decision::kNotEntails;
    case NegationRule::kNoParticles:
    case NegationRule::kR2:
    case NegationRule::kR4b:
      return Decision::kEntails;
  }
  return ate_decision;
}

}  // namespace sanate
