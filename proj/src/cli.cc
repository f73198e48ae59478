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

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "intentarg/augmenter.h"
#include "intentarg/classifier.h"
#include "intentarg/corpus.h"
#include "intentarg/errors.h"
#include "intentarg/eval.h"
#include "intentarg/extractor.h"
#include "intentarg/random.h"
#include "intentarg/rules.h"
#include "intentarg/textnorm.h"
#include "json.hpp"

#ifndef INTENTARG_DEFAULT_RULES
#define INTENTARG_DEFAULT_RULES "data/rules.en-demo.json"
#endif

namespace intentarg {
namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string rules_path = INTENTARG_DEFAULT_RULES;
  std::string analyzer = "whitespace";
  std::string head;
  std::string labels = "int";
  uint64_t seed = kDefaultSeed;
  std::string out;
  std::string format = "table";
  bool header = false;
};

class Session {
 public:
  explicit Session(const Config &config) : config_(config) {}

  const RuleSet &rules() {
    if (!rules_) rules_ = RuleSet::Load(config_.rules_path);
    return *rules_;
  }
  HeadPosition head() {
    return config_.head.empty() ? rules().head_position()
                                : HeadPositionFromName(config_.head);
  }
  AnalyzerSpec analyzer() const {
    AnalyzerSpec spec = AnalyzerSpec::FromName(config_.analyzer);
    if (spec.kind() == AnalyzerSpec::Kind::kExternal &&
        !AnalyzerRegistry::Global().Contains(spec.adapter())) {
      throw Error(ErrorCode::kAnalyzerUnavailable,
                  "no analyzer registered under '" + spec.adapter() + "'");
    }
    return spec;
  }
  CorpusFormat format() const {
    return {LabelFormatFromName(config_.labels), config_.header};
  }
  bool report() const { return config_.format == "report"; }

  std::vector<std::string> Tokens(const std::string &line) const {
    return TokenSurfaces(Tokenize(Normalize(line), analyzer()));
  }

  std::string LabelText(std::optional<SpeechActType> label) const {
    if (!label) return "-";
    return format().labels == LabelFormat::kInt
               ? std::to_string(LabelCode(*label))
               : std::string(LabelTag(*label));
  }

  // Resolved configuration, echoed into every report.
  Json ConfigJson(bool uses_rules) {
    Json j;
    j["rules"] = uses_rules ? Json(config_.rules_path) : Json(nullptr);
    j["analyzer"] = config_.analyzer;
    j["head"] = uses_rules ? Json(std::string(HeadPositionName(head())))
                           : Json(config_.head.empty() ? nullptr
                                                       : Json(config_.head));
    j["labels"] = config_.labels;
    j["header"] = config_.header;
    j["seed"] = config_.seed;
    j["format"] = config_.format;
    return j;
  }

  // Table-format preamble carrying the same configuration.
  void ConfigComment(std::ostream &o, bool uses_rules) {
    Json config = ConfigJson(uses_rules);
    for (const auto &[key, value] : config.items()) {
      o << "# " << key << " = "
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << "\n";
    }
  }

 private:
  Config config_;
  std::optional<RuleSet> rules_;
};

std::vector<std::string> ReadLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json StatsJson(const CorpusStats &s) {
  Json j;
  Json types;
  for (SpeechActType t : kAllSpeechActTypes) {
    types[std::string(LabelName(t))] = s.count(t);
  }
  j["per_type"] = types;
  Json topics;
  for (Topic t : kAllTopics) topics[std::string(TopicTag(t))] = s.count(t);
  topics["untagged"] = s.untagged_topic;
  j["per_topic"] = topics;
  j["total"] = s.total;
  return j;
}

void StatsTable(std::ostream &o, const CorpusStats &s) {
  for (SpeechActType t : kAllSpeechActTypes) {
    o << std::left << std::setw(22) << LabelName(t) << std::right
      << std::setw(10) << s.count(t) << "\n";
  }
  o << std::left << std::setw(22) << "Total" << std::right << std::setw(10)
    << s.total << "\n";
  if (s.untagged_topic != s.total) {
    for (Topic t : kAllTopics) {
      o << std::left << std::setw(22) << TopicTag(t) << std::right
        << std::setw(10) << s.count(t) << "\n";
    }
    o << std::left << std::setw(22) << "untagged" << std::right
      << std::setw(10) << s.untagged_topic << "\n";
  }
}

Json PairJson(const PairScore &p) {
  Json j;
  j["rouge1_p"] = p.rouge1_p;
  j["rouge1_r"] = p.rouge1_r;
  j["rouge1_f"] = p.rouge1_f;
  j["sem_p"] = p.sem_p;
  j["sem_r"] = p.sem_r;
  j["sem_f"] = p.sem_f;
  j["total"] = p.total;
  return j;
}

std::map<SpeechActType, int64_t> ParseQuotas(
    const std::vector<std::string> &items) {
  std::map<SpeechActType, int64_t> quotas;
  for (const std::string &item : items) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "quota must look like TYPE=COUNT: '" + item + "'");
    }
    std::string type = item.substr(0, eq);
    SpeechActType label;
    try {
      label = (type.size() == 1 && std::isdigit(type[0]))
                  ? LabelFromCode(type[0] - '0')
                  : LabelFromTag(type);
    } catch (const Error &e) {
      throw Error(ErrorCode::kInvalidArgument, e.what());
    }
    int64_t count;
    try {
      size_t used = 0;
      count = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
    } catch (const std::exception &) {
      throw Error(ErrorCode::kInvalidArgument, "bad quota count in '" + item + "'");
    }
    quotas[label] = count;
  }
  return quotas;
}

std::array<int64_t, 5> ParseWeights(const std::string &text) {
  std::array<int64_t, 5> weights{};
  std::stringstream in(text);
  std::string field;
  size_t i = 0;
  while (std::getline(in, field, ',')) {
    if (i >= weights.size()) break;
    try {
      weights[i++] = std::stoll(field);
    } catch (const std::exception &) {
      i = weights.size() + 1;
      break;
    }
  }
  if (i != weights.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "weights must be 5 comma-separated integers, got '" + text + "'");
  }
  return weights;
}

int ExitCodeFor(const Error &e) {
  switch (e.code()) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kAnalyzerUnavailable:
      return kExitUsage;
    default:
      return kExitData;
  }
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Intent-argument extraction toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Config config;
  app.add_option("--rules", config.rules_path, "Rule file (JSON)")
      ->capture_default_str();
  app.add_option("--analyzer", config.analyzer,
                 "Tokenizer: whitespace or a registered adapter")
      ->capture_default_str();
  app.add_option("--head", config.head,
                 "Argument head position (default: from the rule file)")
      ->check(CLI::IsMember({"initial", "final"}));
  app.add_option("--labels", config.labels, "Corpus label format")
      ->check(CLI::IsMember({"int", "str"}))
      ->capture_default_str();
  app.add_flag("--header", config.header, "Corpus files carry a header line");
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--out", config.out, "Output file (default: stdout)");
  app.add_option("--format", config.format, "Report style")
      ->check(CLI::IsMember({"table", "report"}))
      ->capture_default_str();

  std::string input, corpus_path, pred_path, gold_path, emb_path, train_path;
  std::string train_out, test_out, fraction_text = "9:1";
  std::string weights_text = "1,1,1,1,4";
  std::vector<std::string> quota_items;
  int64_t variants = 10;
  int threads = 1;
  bool with_pairs = false;
  bool notation = false;

  auto *classify = app.add_subcommand("classify", "Label each input line");
  classify->add_option("input", input, "One utterance per line")->required();
  auto *extract = app.add_subcommand(
      "extract", "Emit label, sentence and argument for each directive");
  extract->add_option("input", input, "One utterance per line")->required();
  extract->add_flag("--notation", notation,
                    "Add the speaker/addressee notation column");
  auto *validate = app.add_subcommand("validate", "Check corpus records");
  validate->add_option("corpus", corpus_path)->required();
  auto *stats = app.add_subcommand("stats", "Count records per type");
  stats->add_option("corpus", corpus_path)->required();
  auto *split = app.add_subcommand("split", "Seeded train/test split");
  split->add_option("corpus", corpus_path)->required();
  split->add_option("--fraction", fraction_text,
                    "Train share: 9:1, 9/10 or 0.9")
      ->capture_default_str();
  split->add_option("--train-out", train_out)->required();
  split->add_option("--test-out", test_out)->required();
  auto *plan = app.add_subcommand("augment-plan", "Plan augmentation quotas");
  plan->add_option("corpus", corpus_path)->required();
  plan->add_option("--quota", quota_items, "TYPE=COUNT, repeatable")
      ->required();
  plan->add_option("--weights", weights_text, "Topic weights")
      ->capture_default_str();
  plan->add_option("--variants", variants, "Variants per argument")
      ->capture_default_str();
  auto *apply = app.add_subcommand(
      "augment-apply", "Generate sentences for label<TAB>argument lines");
  apply->add_option("arguments", input)->required();
  apply->add_option("-n,--variants", variants, "Variants per argument")
      ->capture_default_str();
  auto *score = app.add_subcommand("score", "Score predictions against gold");
  score->add_option("predictions", pred_path)->required();
  score->add_option("gold", gold_path)->required();
  score->add_option("--embeddings", emb_path, "Embedding file")->required();
  score->add_option("--threads", threads)->capture_default_str();
  score->add_flag("--pairs", with_pairs, "Include per-pair scores");
  auto *baseline = app.add_subcommand(
      "baseline", "Nearest-neighbour predictions for input sentences");
  baseline->add_option("train", train_path)->required();
  baseline->add_option("input", input)->required();
  auto *kappa = app.add_subcommand("kappa", "Fleiss' kappa of a count matrix");
  kappa->add_option("matrix", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session session(config);
  std::ostringstream o;
  int status = kExitOk;
  try {
    if (*classify) {
      Json results = Json::array();
      for (const std::string &line : ReadLines(input)) {
        std::vector<std::string> tokens = session.Tokens(line);
        if (tokens.empty()) continue;
        ClassificationResult r = Classify(tokens, session.rules());
        if (session.report()) {
          Json j;
          j["sentence"] = JoinTokens(tokens);
          j["label"] = r.LabelName();
          j["trace"] = r.trace;
          Json spans = Json::array();
          for (const ClauseSpan &s : r.clause_spans) {
            spans.push_back({std::string(ClauseTagName(s.tag)), s.begin, s.end});
          }
          j["clause_spans"] = spans;
          results.push_back(j);
        } else {
          o << session.LabelText(r.label) << "\t" << JoinTokens(tokens) << "\n";
        }
      }
      if (session.report()) {
        o << Json{{"config", session.ConfigJson(true)}, {"results", results}}
                 .dump(2)
          << "\n";
      }
    } else if (*extract) {
      std::vector<CorpusRecord> rows;
      int skipped = 0;
      ExtractionConfig cfg = ExtractionConfig::For(session.rules());
      cfg.head_position = session.head();
      cfg.keep_notation = notation;
      for (const std::string &line : ReadLines(input)) {
        std::vector<std::string> tokens = session.Tokens(line);
        if (tokens.empty()) continue;
        ClassificationResult r = Classify(tokens, session.rules());
        if (!r.label) {
          ++skipped;
          continue;
        }
        IntentArgument arg = Extract(tokens, *r.label, cfg);
        CorpusRecord record{*r.label, JoinTokens(tokens),
                            Render(arg, session.rules()), std::nullopt,
                            std::nullopt};
        if (cfg.keep_notation) {
          record.notation = NotationFor(arg.referents, session.rules());
        }
        rows.push_back(std::move(record));
      }
      o << FormatCorpus(rows, session.format());
      if (skipped) err << skipped << " non-directive line(s) skipped\n";
    } else if (*validate) {
      std::vector<CorpusRecord> records =
          ReadCorpus(corpus_path, session.format());
      HeadPosition head = session.head();
      Json found = Json::array();
      std::ostringstream table;
      int64_t count = 0;
      for (size_t i = 0; i < records.size(); ++i) {
        for (const Violation &v : Validate(records[i], session.rules(), head)) {
          ++count;
          found.push_back({{"record", i + 1},
                           {"kind", std::string(ViolationKindName(v.kind))},
                           {"detail", v.detail}});
          table << (i + 1) << "\t" << ViolationKindName(v.kind) << "\t"
                << v.detail << "\n";
        }
      }
      if (session.report()) {
        o << Json{{"config", session.ConfigJson(true)},
                  {"records", records.size()},
                  {"violation_count", count},
                  {"violations", found}}
                 .dump(2)
          << "\n";
      } else {
        o << table.str();
      }
      if (count > 0) status = kExitViolations;
    } else if (*stats) {
      CorpusStats s = Stats(ReadCorpus(corpus_path, session.format()));
      if (session.report()) {
        o << Json{{"config", session.ConfigJson(false)},
                  {"stats", StatsJson(s)}}
                 .dump(2)
          << "\n";
      } else {
        session.ConfigComment(o, false);
        StatsTable(o, s);
      }
    } else if (*split) {
      std::vector<CorpusRecord> records =
          ReadCorpus(corpus_path, session.format());
      SplitSpec spec{ParseFraction(fraction_text), config.seed};
      SplitResult parts = Split(records, spec);
      WriteCorpus(parts.train, train_out, session.format());
      WriteCorpus(parts.test, test_out, session.format());
      if (session.report()) {
        o << Json{{"config", session.ConfigJson(false)},
                  {"train_fraction",
                   std::to_string(spec.train_fraction.num) + "/" +
                       std::to_string(spec.train_fraction.den)},
                  {"train", parts.train.size()},
                  {"test", parts.test.size()}}
                 .dump(2)
          << "\n";
      } else {
        session.ConfigComment(o, false);
        o << "train\t" << parts.train.size() << "\ntest\t"
          << parts.test.size() << "\n";
      }
    } else if (*plan) {
      CorpusStats current = Stats(ReadCorpus(corpus_path, session.format()));
      AugmentationPlan p = PlanAugmentation(
          current, ParseQuotas(quota_items), ParseWeights(weights_text),
          variants);
      if (session.report()) {
        Json quotas, allocation;
        for (const auto &[type, quota] : p.quotas) {
          quotas[std::string(LabelName(type))] = quota;
          Json row;
          for (Topic t : kAllTopics) {
            row[std::string(TopicTag(t))] =
                p.allocation.at(type)[static_cast<int>(t)];
          }
          allocation[std::string(LabelName(type))] = row;
        }
        o << Json{{"config", session.ConfigJson(false)},
                  {"weights", p.weights},
                  {"variants_per_argument", p.variants_per_argument},
                  {"quotas", quotas},
                  {"allocation", allocation},
                  {"total_arguments", p.TotalArguments()},
                  {"total_pairs", p.TotalPairs()},
                  {"current", StatsJson(p.current)},
                  {"projected", StatsJson(p.projected)}}
                 .dump(2)
          << "\n";
      } else {
        session.ConfigComment(o, false);
        o << std::left << std::setw(22) << "type";
        for (Topic t : kAllTopics) o << std::right << std::setw(10) << TopicTag(t);
        o << std::setw(10) << "quota" << "\n";
        for (const auto &[type, row] : p.allocation) {
          o << std::left << std::setw(22) << LabelName(type);
          for (int64_t v : row) o << std::right << std::setw(10) << v;
          o << std::setw(10) << p.quotas.at(type) << "\n";
        }
        o << "arguments\t" << p.TotalArguments() << "\npairs\t"
          << p.TotalPairs() << "\n";
        o << "projected:\n";
        StatsTable(o, p.projected);
      }
    } else if (*apply) {
      const RuleSet &rules = session.rules();
      HeadPosition head = session.head();
      std::vector<CorpusRecord> rows;
      std::vector<std::string> lines = ReadLines(input);
      for (size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::vector<std::string> cols;
        std::stringstream fields(lines[i]);
        std::string col;
        while (std::getline(fields, col, '\t')) cols.push_back(col);
        if (cols.size() < 2 || cols.size() > 3) {
          throw Error(ErrorCode::kParseError,
                      "expected label<TAB>argument[<TAB>topic]",
                      static_cast<int>(i + 1));
        }
        CorpusRecord probe = ParseCorpus(cols[0] + "\tx\tx", session.format())
                                 .front();
        std::string argument = Normalize(cols[1]);
        IntentArgument arg = ParseArgument(argument, rules, head);
        if (!HeadAllowed(probe.label, arg.head)) {
          throw Error(ErrorCode::kParseError,
                      "argument head does not fit the label",
                      static_cast<int>(i + 1));
        }
        std::optional<Topic> topic;
        if (cols.size() == 3 && !cols[2].empty()) topic = TopicFromTag(cols[2]);
        std::vector<std::string> sentences;
        try {
          sentences = GenerateVariants(arg, variants, rules, config.seed + i);
        } catch (const Error &e) {
          throw Error(e.code(), e.what(), static_cast<int>(i + 1));
        }
        for (std::string &s : sentences) {
          rows.push_back({probe.label, std::move(s), argument, std::nullopt,
                          topic});
        }
      }
      o << FormatCorpus(rows, session.format());
    } else if (*score) {
      std::vector<std::string> predictions = ReadLines(pred_path);
      std::vector<CorpusRecord> gold = ReadCorpus(gold_path, session.format());
      EmbeddingTable emb = EmbeddingTable::Load(emb_path);
      EvalReport report =
          ScoreCorpus(predictions, gold, emb, session.analyzer(), threads);
      if (session.report()) {
        Json j;
        j["config"] = session.ConfigJson(false);
        j["embeddings"] = emb_path;
        j["count"] = report.count;
        j["means"] = report.means ? PairJson(*report.means) : Json(nullptr);
        if (with_pairs) {
          Json pairs = Json::array();
          for (const PairScore &p : report.pairs) pairs.push_back(PairJson(p));
          j["pairs"] = pairs;
        }
        o << j.dump(2) << "\n";
      } else {
        session.ConfigComment(o, false);
        o << "count\t" << report.count << "\n";
        if (report.means) {
          const PairScore &m = *report.means;
          o << std::fixed << std::setprecision(4);
          o << "ROUGE-1\tP " << m.rouge1_p << "\tR " << m.rouge1_r << "\tF "
            << m.rouge1_f << "\n";
          o << "Semantic\tP " << m.sem_p << "\tR " << m.sem_r << "\tF "
            << m.sem_f << "\n";
          o << "Total\t" << m.total << "\n";
        } else {
          o << "means\tabsent\n";
        }
      }
    } else if (*baseline) {
      NnBaseline model(ReadCorpus(train_path, session.format()),
                       session.analyzer());
      for (const std::string &line : ReadLines(input)) {
        o << model.Predict(line) << "\n";
      }
    } else if (*kappa) {
      AgreementMatrix m = AgreementMatrix::Parse(ReadFile(input));
      double k = FleissKappa(m);
      if (session.report()) {
        o << Json{{"config", session.ConfigJson(false)},
                  {"items", m.items()},
                  {"categories", m.categories()},
                  {"raters", m.raters()},
                  {"kappa", k}}
                 .dump(2)
          << "\n";
      } else {
        o << std::setprecision(17) << k << "\n";
      }
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  if (config.out.empty()) {
    out << o.str();
  } else {
    std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
    if (!file || !(file << o.str()) || !file.flush()) {
      err << "error: cannot write " << config.out << "\n";
      return kExitData;
    }
  }
  return status;
}

}  // namespace intentarg
