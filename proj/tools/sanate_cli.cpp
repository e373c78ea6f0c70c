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

// Command-line front end.
//
//   sanate judge --text <s> --hyp <s> [--mode ate|sanate] [--trace]
//   sanate eval --dataset <path> [--mode ate|sanate] [--report json|tsv]
//               [--out <path>]
//   sanate polarity --text <s>
//
// Exit status: 0 success, 1 usage error, 2 resource or I/O error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "sanate/sanate.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;

struct GlobalOptions {
  sanate::Thresholds thresholds;
  std::string stopwords;
  std::string semlex;
  std::string sentlex;
  std::string posdict;
  std::string negdict;
  std::string affixes;
  bool sentiment_promote = false;
  unsigned threads = 1;
};

sanate::Resources LoadResources(const GlobalOptions& g) {
  sanate::Resources res;
  if (!g.affixes.empty()) res.affixes = sanate::AffixTable::Load(g.affixes);
  if (!g.stopwords.empty()) res.stop_list = sanate::StopList::Load(g.stopwords);
  if (!g.semlex.empty()) {
    res.semantic = sanate::SemanticLexicon::Load(g.semlex, res.affixes);
  }
  if (!g.sentlex.empty()) {
    res.sentiment =
        sanate::SentimentLexicon::SplitCombined(g.sentlex, res.affixes);
  } else if (!g.posdict.empty() || !g.negdict.empty()) {
    if (g.posdict.empty() || g.negdict.empty()) {
      throw sanate::Error(sanate::ErrorCode::kIoFailure,
                          "--posdict and --negdict must be given together");
    }
    res.sentiment =
        sanate::SentimentLexicon::LoadSplit(g.posdict, g.negdict, res.affixes);
  }
  if (res.sentiment.conflict_count() > 0) {
    std::cerr << "warning: " << res.sentiment.conflict_count()
              << " word(s) listed with both polarities were dropped\n";
  }
  return res;
}

sanate::Settings MakeSettings(const GlobalOptions& g) {
  return {g.thresholds, g.sentiment_promote};
}

const std::map<std::string, sanate::Mode> kModes = {
    {"ate", sanate::Mode::kAte}, {"sanate", sanate::Mode::kSanate}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic textual entailment with negation and sentiment checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the flags");

  GlobalOptions g;
  app.add_option("--tau1", g.thresholds.tau1, "bound on cos_hut - cos_t")
      ->capture_default_str();
  app.add_option("--tau2", g.thresholds.tau2, "bound on cos_h - cos_hut")
      ->capture_default_str();
  app.add_option("--tau3", g.thresholds.tau3, "minimum of the best measure")
      ->capture_default_str();
  app.add_option("--stopwords", g.stopwords, "stop-word list, one per line");
  app.add_option("--semlex", g.semlex, "semantic lexicon TSV");
  app.add_option("--sentlex", g.sentlex, "combined word,polarity CSV");
  app.add_option("--posdict", g.posdict, "positive dictionary, one per line");
  app.add_option("--negdict", g.negdict, "negative dictionary, one per line");
  app.add_option("--affixes", g.affixes, "affix table override");
  app.add_flag("--sentiment-promote,--sentiment_promote", g.sentiment_promote,
               "let agreeing polarities lift a not-entails decision");
  app.add_option("--threads", g.threads, "evaluation worker threads")
      ->check(CLI::PositiveNumber);

  sanate::Mode mode = sanate::Mode::kSanate;

  auto* judge = app.add_subcommand("judge", "judge one text/hypothesis pair");
  std::string text;
  std::string hyp;
  bool trace = false;
  judge->add_option("--text", text)->required();
  judge->add_option("--hyp", hyp)->required();
  judge->add_option("--mode", mode)
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  judge->add_flag("--trace", trace, "print the full JSON trace");

  auto* eval = app.add_subcommand("eval", "evaluate on a JSON-lines dataset");
  std::string dataset;
  std::string report = "json";
  std::string out_path;
  eval->add_option("--dataset", dataset)->required();
  eval->add_option("--mode", mode)
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  eval->add_option("--report", report)
      ->check(CLI::IsMember({"json", "tsv"}));
  eval->add_option("--out", out_path);

  auto* polarity = app.add_subcommand("polarity", "classify one sentence");
  std::string pol_text;
  polarity->add_option("--text", pol_text)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  for (double tau : {g.thresholds.tau1, g.thresholds.tau2, g.thresholds.tau3}) {
    if (!std::isfinite(tau)) {
      std::cerr << "error: thresholds must be finite\n";
      return kExitUsage;
    }
  }

  try {
    const sanate::Resources res = LoadResources(g);
    const sanate::Settings settings = MakeSettings(g);

    if (*judge) {
      const auto tr = sanate::Judge(text, hyp, mode, res, settings);
      if (trace) {
        std::cout << sanate::ToJson(tr).dump() << '\n';
      } else {
        std::cout << sanate::DecisionName(tr.final_decision) << '\n';
      }
    } else if (*eval) {
      const auto records = sanate::LoadDataset(dataset);
      const auto rep = sanate::Evaluate(records, mode, res, settings, g.threads);
      const std::string body = report == "tsv"
                                   ? sanate::ToTsv(rep)
                                   : sanate::ToJson(rep).dump(2) + "\n";
      if (out_path.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        out << body;
        if (!out) {
          throw sanate::Error(sanate::ErrorCode::kIoFailure,
                              "cannot write " + out_path);
        }
      }
    } else if (*polarity) {
      const auto sentence =
          sanate::ProcessSentence(pol_text, res.stop_list, res.affixes);
      std::cout << sanate::ToJson(
                       sanate::ClassifyPolarity(sentence, res.sentiment))
                       .dump()
                << '\n';
    }
  } catch (const sanate::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  }
  return 0;
}
