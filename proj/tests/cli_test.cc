// Copyright 2026 The Intentarg Authors.
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

#include "intentarg/cli.h"

#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "test_util.h"

namespace intentarg {
namespace {

using testing::ScratchDir;
using testing::Slurp;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Run(std::vector<std::string> args) {
  args.insert(args.begin(), "intentarg");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char kCorpus[] =
    "4\ti suggest that you ask your wife\tto ask ones wife\taddressee\tfree\n"
    "3\tdont pick me up\tnot to pick the speaker up\tspeaker\tmail\n"
    "2\thow many points you got\tthe number of points the addressee got\t"
    "addressee\tfree\n"
    "0\tdid i tell you\tif the speaker tell the addressee\tboth\tschedule\n";

TEST_CASE("score of a corpus against itself is perfect") {
  ScratchDir dir("cli_score");
  auto gold = dir.Write("gold.tsv", kCorpus);
  auto preds = dir.Write("pred.txt",
                         "to ask ones wife\nnot to pick the speaker up\n"
                         "the number of points the addressee got\n"
                         "if the speaker tell the addressee\n");
  auto emb = dir.Write("emb.txt", "to 1 0\nask 0 1\nthe 1 1\n");
  Outcome r = Run({"--format", "report", "score", preds, gold,
                   "--embeddings", emb, "--pairs"});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 4);
  CHECK(j["means"]["rouge1_f"].get<double>() == 1.0);
  CHECK(j["pairs"].size() == 4);
  CHECK(j["config"]["seed"] == 20200417);

  Outcome table = Run({"score", preds, gold, "--embeddings", emb});
  CHECK(table.code == kExitOk);
  CHECK(table.out.find("# seed = 20200417") != std::string::npos);
  CHECK(table.out.find("count\t4") != std::string::npos);

  auto short_preds = dir.Write("short.txt", "to ask ones wife\n");
  CHECK(Run({"score", short_preds, gold, "--embeddings", emb}).code ==
        kExitData);
}

TEST_CASE("validate reports each violation") {
  ScratchDir dir("cli_validate");
  auto ok = dir.Write("ok.tsv", kCorpus);
  Outcome r = Run({"validate", ok});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  auto bad = dir.Write("bad.tsv",
                       std::string(kCorpus) + "4\tgo home\tnot to go home\n");
  r = Run({"validate", bad});
  CHECK(r.code == kExitViolations);
  CHECK(r.out == "5\tHeadMismatch\tNotTo under Requirement\n");
  r = Run({"--format", "report", "validate", bad});
  CHECK(nlohmann::json::parse(r.out)["violation_count"] == 1);
}

TEST_CASE("stats and augmentation plans") {
  ScratchDir dir("cli_stats");
  auto corpus = dir.Write("c.tsv", kCorpus);
  Outcome r = Run({"--format", "report", "stats", corpus});
  CHECK(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["stats"]["total"] == 4);
  CHECK(j["stats"]["per_type"]["Requirement"] == 1);
  CHECK(j["stats"]["per_topic"]["free"] == 2);

  r = Run({"--format", "report", "augment-plan", corpus, "--quota", "wh=400",
           "--quota", "5=800"});
  CHECK(r.code == kExitOk);
  j = nlohmann::json::parse(r.out);
  CHECK(j["total_pairs"] == 12000);
  CHECK(j["allocation"]["WhQuestion"]["free"] == 200);
  CHECK(j["projected"]["total"] == 12004);

  CHECK(Run({"augment-plan", corpus, "--quota", "bogus=1"}).code == kExitUsage);
  CHECK(Run({"augment-plan", corpus, "--quota", "wh=1", "--weights", "1,2"})
            .code == kExitUsage);
}

TEST_CASE("split is reproducible and leaves the input alone") {
  ScratchDir dir("cli_split");
  std::string text;
  for (int i = 0; i < 30; ++i) {
    text += "4\tgo home " + std::to_string(i) + "\tto go home\n";
  }
  auto corpus = dir.Write("c.tsv", text);
  std::vector<std::string> args = {"--seed", "7", "split", corpus,
                                   "--fraction", "9:1", "--train-out",
                                   dir.File("train.tsv"), "--test-out",
                                   dir.File("test.tsv")};
  Outcome r = Run(args);
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("test\t3") != std::string::npos);
  std::string test1 = Slurp(dir.File("test.tsv"));
  CHECK(Run(args).code == kExitOk);
  CHECK(Slurp(dir.File("test.tsv")) == test1);
  CHECK(Slurp(corpus) == text);
  CHECK(Slurp(dir.File("train.tsv")).size() + test1.size() == text.size());
}

TEST_CASE("usage and data errors map to exit codes") {
  ScratchDir dir("cli_errors");
  CHECK(Run({}).code == kExitUsage);
  CHECK(Run({"frobnicate"}).code == kExitUsage);
  CHECK(Run({"stats"}).code == kExitUsage);
  CHECK(Run({"--help"}).code == kExitOk);
  CHECK(Run({"stats", dir.File("missing.tsv")}).code == kExitData);
  auto bad = dir.Write("bad.tsv", "4\tonly two\n");
  Outcome r = Run({"stats", bad});
  CHECK(r.code == kExitData);
  CHECK(r.err.find("line 1") != std::string::npos);
  auto input = dir.Write("in.txt", "go home\n");
  CHECK(Run({"--analyzer", "nonexistent", "classify", input}).code ==
        kExitUsage);
  CHECK(Run({"--rules", dir.File("none.json"), "classify", input}).code ==
        kExitData);
}

TEST_CASE("kappa") {
  ScratchDir dir("cli_kappa");
  auto m = dir.Write("m.txt", "2 0\n0 2\n1 1\n1 1\n");
  Outcome r = Run({"kappa", m});
  CHECK(r.code == kExitOk);
  CHECK(std::stod(r.out) == doctest::Approx(0.0));
  r = Run({"--format", "report", "kappa", m});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["items"] == 4);
  CHECK(j["raters"] == 2);
  auto bad = dir.Write("bad.txt", "2 0\n1 0\n");
  CHECK(Run({"kappa", bad}).code == kExitData);
}

TEST_CASE("classify and extract") {
  ScratchDir dir("cli_extract");
  std::string text =
      "Why don't you just call the police?\n"
      "the weather is nice\n"
      "\n"
      "yeah  but don't pick me up\n";
  auto input = dir.Write("in.txt", text);
  Outcome r = Run({"classify", input});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "4\twhy dont you just call the police\n"
        "-\tthe weather is nice\n"
        "3\tyeah but dont pick me up\n");
  r = Run({"--labels", "str", "extract", input, "--notation"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "req\twhy dont you just call the police\tto call the police\tnone\n"
        "ph\tyeah but dont pick me up\tnot to pick the speaker up\tspeaker\n");
  CHECK(r.err.find("1 non-directive") != std::string::npos);
  r = Run({"--format", "report", "classify", input});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["results"].size() == 3);
  CHECK(j["results"][2]["clause_spans"][0][0] == "PH");
  CHECK(Slurp(input) == text);
}

TEST_CASE("augment-apply and baseline") {
  ScratchDir dir("cli_apply");
  auto args = dir.Write("args.tsv", "4\tto call the police\tfree\n");
  Outcome r = Run({"augment-apply", args, "-n", "3"});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    CHECK(line.rfind("4\t", 0) == 0);
    CHECK(line.find("\tto call the police\t\tfree") != std::string::npos);
  }
  CHECK(n == 3);
  CHECK(Run({"augment-apply", args, "-n", "3"}).out == r.out);
  CHECK(Run({"augment-apply", args, "-n", "100000"}).code == kExitData);

  auto train = dir.Write("train.tsv", kCorpus);
  auto input = dir.Write("in.txt", "dont pick me up please\n");
  r = Run({"--out", dir.File("pred.txt"), "baseline", train, input});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(Slurp(dir.File("pred.txt")) == "not to pick the speaker up\n");
}

}  // namespace
}  // namespace intentarg
