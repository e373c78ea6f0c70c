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

// Hand-written expectations for the 16 synthetic negation placements:
// text and hypothesis share the verb يكتب; يقرا occurs only in the text and
// يشتري only in the hypothesis.

#pragma once

#include <array>
#include <string>
#include <utility>

#include "sanate/negation_rules.hpp"

namespace sanate::negation_table {

struct Row {
  bool text_negates_common;
  bool hyp_negates_common;
  bool text_negates_other;
  bool hyp_negates_other;
  NegationRule rule;
  Decision decision;
};

inline constexpr Decision E = Decision::kEntails;
inline constexpr Decision N = Decision::kNotEntails;

inline constexpr std::array<Row, 16> kRows = {{
    {false, false, false, false, NegationRule::kNoParticles, E},
    {false, false, false, true, NegationRule::kR3, N},
    {false, false, true, false, NegationRule::kR3, N},
    {false, false, true, true, NegationRule::kR3, N},
    {false, true, false, false, NegationRule::kR1, N},
    {false, true, false, true, NegationRule::kR1, N},
    {false, true, true, false, NegationRule::kR1, N},
    {false, true, true, true, NegationRule::kR1, N},
    {true, false, false, false, NegationRule::kR1, N},
    {true, false, false, true, NegationRule::kR1, N},
    {true, false, true, false, NegationRule::kR1, N},
    {true, false, true, true, NegationRule::kR1, N},
    {true, true, false, false, NegationRule::kR2, E},
    {true, true, false, true, NegationRule::kR2, E},
    {true, true, true, false, NegationRule::kR2, E},
    {true, true, true, true, NegationRule::kR2, E},
}};

inline std::pair<std::string, std::string> BuildPair(const Row& r) {
  std::string text = std::string(r.text_negates_common ? "لا " : "") +
                     "يكتب " + (r.text_negates_other ? "لم " : "") +
                     "يقرا الدرس";
  std::string hyp = std::string(r.hyp_negates_common ? "لن " : "") + "يكتب " +
                    (r.hyp_negates_other ? "ليس " : "") + "يشتري الدرس";
  return {text, hyp};
}

inline std::string Describe(const Row& r) {
  return std::string("T-common=") + (r.text_negates_common ? "1" : "0") +
         " H-common=" + (r.hyp_negates_common ? "1" : "0") +
         " T-other=" + (r.text_negates_other ? "1" : "0") +
         " H-other=" + (r.hyp_negates_other ? "1" : "0");
}

}  // namespace sanate::negation_table
