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

#include "sanate/sentiment_polarity.hpp"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "test_util.hpp"

namespace sanate {
namespace {

PolarityResult Classify(std::string_view text, const SentimentLexicon& lex,
                        const StopList& stop = {}) {
  return ClassifyPolarity(ProcessSentence(text, stop), lex);
}

PolarityResult WithLabel(Polarity p, std::size_t pos, std::size_t neg) {
  PolarityResult r;
  r.polarity = p;
  r.pos_tf = pos;
  r.neg_tf = neg;
  Token tok;
  tok.normalized = "x";
  for (std::size_t i = 0; i < pos; ++i) {
    r.opinion_words.push_back({tok, WordPolarity::kPositive});
  }
  for (std::size_t i = 0; i < neg; ++i) {
    r.opinion_words.push_back({tok, WordPolarity::kNegative});
  }
  return r;
}

class ClassifyTest : public ::testing::Test {
 protected:
  SentimentLexicon lex_ = SentimentLexicon::FromWords(
      {"جيد", "ممتاز", "رائع"}, {"سيء", "مزعج", "ممل"});
};

TEST_F(ClassifyTest, TwoPositiveWords) {
  const auto r = Classify("الفندق ممتاز والطعام جيد", lex_);
  EXPECT_EQ(r.polarity, Polarity::kPositive);
  EXPECT_EQ(r.pos_tf, 2u);
  EXPECT_EQ(r.neg_tf, 0u);
}

TEST_F(ClassifyTest, TwoNegativeWords) {
  const auto r = Classify("الفيلم ممل ومزعج", lex_);
  EXPECT_EQ(r.polarity, Polarity::kNegative);
  EXPECT_EQ(r.neg_tf, 2u);
}

TEST_F(ClassifyTest, BalancedIsNeutral) {
  const auto r = Classify("الطعام جيد والخدمة سيء", lex_);
  EXPECT_EQ(r.polarity, Polarity::kNeutral);
  EXPECT_EQ(r.pos_tf, 1u);
  EXPECT_EQ(r.neg_tf, 1u);
}

TEST_F(ClassifyTest, NoHitsIsNoOpinion) {
  const auto r = Classify("ذهب الطالب الى المدرسة", lex_);
  EXPECT_EQ(r.polarity, Polarity::kNoOpinion);
  EXPECT_EQ(r.pos_tf, 0u);
  EXPECT_EQ(r.neg_tf, 0u);
  EXPECT_TRUE(r.opinion_words.empty());
}

TEST_F(ClassifyTest, SingleOpinionWordIsNoOpinion) {
  EXPECT_EQ(Classify("الطعام جيد", lex_).polarity, Polarity::kNoOpinion);
}

TEST_F(ClassifyTest, RepeatedWordsCountEachTime) {
  const auto r = Classify("جيد جيد جيد سيء", lex_);
  EXPECT_EQ(r.pos_tf, 3u);
  EXPECT_EQ(r.neg_tf, 1u);
  EXPECT_EQ(r.polarity, Polarity::kPositive);
}

TEST_F(ClassifyTest, StopWordsAndParticlesAreCounted) {
  const StopList stop{"جيد", "ممتاز"};
  const auto r = Classify("جيد ممتاز", lex_, stop);
  EXPECT_EQ(r.polarity, Polarity::kPositive);
  const auto lex = SentimentLexicon::FromWords({}, {"لا", "لن"});
  EXPECT_EQ(Classify("لا لن", lex).polarity, Polarity::kNegative);
}

TEST(LabelFromCountsTest, Table) {
  EXPECT_EQ(LabelFromCounts(2, 0), Polarity::kPositive);
  EXPECT_EQ(LabelFromCounts(3, 2), Polarity::kPositive);
  EXPECT_EQ(LabelFromCounts(0, 2), Polarity::kNegative);
  EXPECT_EQ(LabelFromCounts(1, 1), Polarity::kNeutral);
  EXPECT_EQ(LabelFromCounts(4, 4), Polarity::kNeutral);
  EXPECT_EQ(LabelFromCounts(0, 0), Polarity::kNoOpinion);
  EXPECT_EQ(LabelFromCounts(1, 0), Polarity::kNoOpinion);
  EXPECT_EQ(LabelFromCounts(0, 1), Polarity::kNoOpinion);
  EXPECT_EQ(LabelFromCounts(2, 3), Polarity::kNegative);
}

// Random lexicons and sentences against the independent recount, plus the
// dictionary-swap symmetry.
TEST(ClassifyPolarityPropertyTest, MatchesOracleAndSwapSymmetry) {
  std::mt19937 rng(77);
  for (int iter = 0; iter < 2000; ++iter) {
    std::vector<std::pair<std::string, std::string>> vocab;
    for (int i = 0; i < 12; ++i) {
      vocab.emplace_back("w" + std::to_string(i),
                         "s" + std::to_string(i % 5));
    }
    std::bernoulli_distribution coin(0.25);
    std::vector<std::string> pos, neg;
    for (const auto& [w, s] : vocab) {
      if (coin(rng)) pos.push_back(w);
      if (coin(rng)) neg.push_back(w);
      if (coin(rng)) (coin(rng) ? pos : neg).push_back(s);
    }
    const auto lex = SentimentLexicon::FromWords(pos, neg);
    std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
    std::vector<std::pair<std::string, std::string>> words;
    for (int n = std::uniform_int_distribution<int>(0, 10)(rng); n > 0; --n) {
      words.push_back(vocab[pick(rng)]);
    }
    const auto sentence = testing::MakeSentence(words);

    const std::set<std::string> pd(lex.positive().begin(), lex.positive().end());
    const std::set<std::string> nd(lex.negative().begin(), lex.negative().end());
    const auto expected = oracle::RecountPolarity(sentence, pd, nd);
    const auto got = ClassifyPolarity(sentence, lex);
    ASSERT_EQ(got.pos_tf, expected.pos);
    ASSERT_EQ(got.neg_tf, expected.neg);
    ASSERT_EQ(static_cast<int>(got.polarity), expected.label);
    ASSERT_EQ(got.opinion_words.size(), got.pos_tf + got.neg_tf);

    const auto swapped = ClassifyPolarity(sentence, lex.Swapped());
    switch (got.polarity) {
      case Polarity::kPositive:
        ASSERT_EQ(swapped.polarity, Polarity::kNegative);
        break;
      case Polarity::kNegative:
        ASSERT_EQ(swapped.polarity, Polarity::kPositive);
        break;
      default:
        ASSERT_EQ(swapped.polarity, got.polarity);
    }
  }
}

TEST(AdjustForSentimentTest, DifferentPolarityVetoes) {
  EXPECT_EQ(AdjustForSentiment(Decision::kEntails,
                               WithLabel(Polarity::kNegative, 0, 2),
                               WithLabel(Polarity::kPositive, 2, 0)),
            Decision::kNotEntails);
}

TEST(AdjustForSentimentTest, SamePolarityKeepsEntails) {
  EXPECT_EQ(AdjustForSentiment(Decision::kEntails,
                               WithLabel(Polarity::kNegative, 0, 2),
                               WithLabel(Polarity::kNegative, 1, 3)),
            Decision::kEntails);
}

TEST(AdjustForSentimentTest, NotApplicableWithoutOpinion) {
  EXPECT_EQ(AdjustForSentiment(Decision::kEntails,
                               WithLabel(Polarity::kNoOpinion, 0, 0),
                               WithLabel(Polarity::kPositive, 2, 0)),
            Decision::kEntails);
  // Opinion words present but unlabeled.
  EXPECT_EQ(AdjustForSentiment(Decision::kEntails,
                               WithLabel(Polarity::kNoOpinion, 1, 0),
                               WithLabel(Polarity::kNegative, 0, 2)),
            Decision::kEntails);
}

TEST(AdjustForSentimentTest, NeutralIsALabel) {
  EXPECT_EQ(AdjustForSentiment(Decision::kEntails,
                               WithLabel(Polarity::kNeutral, 1, 1),
                               WithLabel(Polarity::kPositive, 2, 0)),
            Decision::kNotEntails);
  EXPECT_EQ(AdjustForSentiment(Decision::kEntails,
                               WithLabel(Polarity::kNeutral, 1, 1),
                               WithLabel(Polarity::kNeutral, 2, 2)),
            Decision::kEntails);
}

TEST(AdjustForSentimentTest, VetoOnlyUnlessPromoting) {
  const std::vector<PolarityResult> results = {
      WithLabel(Polarity::kPositive, 2, 0), WithLabel(Polarity::kNegative, 0, 2),
      WithLabel(Polarity::kNeutral, 1, 1), WithLabel(Polarity::kNoOpinion, 0, 0),
      WithLabel(Polarity::kNoOpinion, 1, 0)};
  for (const auto& t : results) {
    for (const auto& h : results) {
      EXPECT_EQ(AdjustForSentiment(Decision::kNotEntails, t, h),
                Decision::kNotEntails);
    }
  }
  EXPECT_EQ(AdjustForSentiment(Decision::kNotEntails, results[1], results[1],
                               /*promote=*/true),
            Decision::kEntails);
  EXPECT_EQ(AdjustForSentiment(Decision::kNotEntails, results[0], results[1],
                               /*promote=*/true),
            Decision::kNotEntails);
  EXPECT_EQ(AdjustForSentiment(Decision::kNotEntails, results[3], results[3],
                               /*promote=*/true),
            Decision::kNotEntails);
}

}  // namespace
}  // namespace sanate
