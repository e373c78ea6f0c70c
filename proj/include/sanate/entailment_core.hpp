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

// Lexical-overlap entailment: common-word counting, the three cosine-style
// overlap measures and the threshold gates that turn them into a decision.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>

#include "sanate/error.hpp"
#include "sanate/lexical_resources.hpp"
#include "sanate/text_normalization.hpp"

namespace sanate {

enum class Decision { kNotEntails, kEntails };

inline std::string_view DecisionName(Decision d) {
  return d == Decision::kEntails ? "entails" : "not_entails";
}

// Two tokens match when their stems are equal or when any of their
// normalized/stem forms are related in the lexicon. Symmetric.
inline bool WordsMatch(const Token& a, const Token& b,
                       const SemanticLexicon& lex) {
  if (a.stem == b.stem) return true;
  for (const std::string* ka : {&a.normalized, &a.stem}) {
    const auto& rel = lex.Related(*ka);
    if (rel.empty()) continue;
    if (rel.count(b.normalized) || rel.count(b.stem)) return true;
  }
  return false;
}

struct CommonCounts {
  std::size_t c = 0;  // matched hypothesis tokens
  std::size_t m = 0;  // text length
  std::size_t n = 0;  // hypothesis length

  friend bool operator==(const CommonCounts&, const CommonCounts&) = default;
};

// Each hypothesis content token counts at most once, so c <= n.
inline CommonCounts CountCommon(const ProcessedSentence& text,
                                const ProcessedSentence& hyp,
                                const SemanticLexicon& lex) {
  std::unordered_set<std::string> text_stems;
  std::unordered_set<std::string> text_related;
  for (const Token& t : text.content_tokens) {
    text_stems.insert(t.stem);
    for (const auto& r : lex.Related(t.normalized)) text_related.insert(r);
    for (const auto& r : lex.Related(t.stem)) text_related.insert(r);
  }
  CommonCounts out;
  out.m = text.content_tokens.size();
  out.n = hyp.content_tokens.size();
  for (const Token& h : hyp.content_tokens) {
    if (text_stems.count(h.stem) || text_related.count(h.normalized) ||
        text_related.count(h.stem)) {
      ++out.c;
    }
  }
  return out;
}

struct OverlapMeasures {
  std::size_t c = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  double cos_t = 0.0;    // sqrt(c/m)
  double cos_h = 0.0;    // sqrt(c/n)
  double cos_hut = 0.0;  // sqrt(4c^2 / ((n+c)(m+c)))
};

// Throws Error(kDegenerateLength) when m or n is zero.
inline OverlapMeasures ComputeMeasures(std::size_t c, std::size_t m,
                                       std::size_t n) {
  if (m == 0 || n == 0) {
    throw Error(ErrorCode::kDegenerateLength,
                "m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  const double cd = static_cast<double>(c);
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  OverlapMeasures out{c, m, n};
  out.cos_t = std::sqrt(cd / md);
  out.cos_h = std::sqrt(cd / nd);
  out.cos_hut = std::sqrt(4.0 * cd * cd / ((nd + cd) * (md + cd)));
  return out;
}

struct Thresholds {
  double tau1 = 0.095;  // cos_hut - cos_t <= tau1
  double tau2 = 0.2;    // cos_h - cos_hut <= tau2
  double tau3 = 0.5;    // max measure >= tau3
};

struct AteTrace {
  OverlapMeasures measures;
  // m == 0 or n == 0; the measures are left at zero and the pair is rejected.
  bool degenerate_length = false;
  bool length_gate_passed = false;        // m >= n >= c
  bool primary_condition_passed = false;  // cos_h >= cos_hut >= cos_t
  bool condition4_passed = false;
  bool condition5_passed = false;
  bool condition6_passed = false;
  Decision decision = Decision::kNotEntails;

  bool AllGatesPassed() const {
    return !degenerate_length && length_gate_passed &&
           primary_condition_passed && condition4_passed &&
           condition5_passed && condition6_passed;
  }
};

// Every gate is evaluated, even after an earlier one fails. Comparisons are
// inclusive with no epsilon.
inline AteTrace DecideAte(const OverlapMeasures& meas, const Thresholds& th,
                          bool degenerate = false) {
  AteTrace tr;
  tr.measures = meas;
  tr.degenerate_length = degenerate;
  tr.length_gate_passed = meas.m >= meas.n && meas.n >= meas.c;
  tr.primary_condition_passed =
      meas.cos_h >= meas.cos_hut && meas.cos_hut >= meas.cos_t;
  tr.condition4_passed = meas.cos_hut - meas.cos_t <= th.tau1;
  tr.condition5_passed = meas.cos_h - meas.cos_hut <= th.tau2;
  tr.condition6_passed =
      std::max({meas.cos_t, meas.cos_h, meas.cos_hut}) >= th.tau3;
  tr.decision = tr.AllGatesPassed() ? Decision::kEntails
                                    : Decision::kNotEntails;
  return tr;
}

inline AteTrace JudgeAte(const ProcessedSentence& text,
                         const ProcessedSentence& hyp,
                         const SemanticLexicon& lex, const Thresholds& th) {
  const CommonCounts counts = CountCommon(text, hyp, lex);
  if (counts.m == 0 || counts.n == 0) {
    OverlapMeasures zero{counts.c, counts.m, counts.n};
    return DecideAte(zero, th, /*degenerate=*/true);
  }
  return DecideAte(ComputeMeasures(counts.c, counts.m, counts.n), th);
}

inline AteTrace JudgeAte(std::string_view raw_text, std::string_view raw_hyp,
                         const Resources& res, const Thresholds& th = {}) {
  return JudgeAte(ProcessSentence(raw_text, res.stop_list, res.affixes),
                  ProcessSentence(raw_hyp, res.stop_list, res.affixes),
                  res.semantic, th);
}

}  // namespace sanate
