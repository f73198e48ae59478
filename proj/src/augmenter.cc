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

#include "intentarg/augmenter.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "intentarg/classifier.h"
#include "intentarg/errors.h"
#include "intentarg/extractor.h"
#include "intentarg/random.h"
#include "intentarg/textnorm.h"

namespace intentarg {
namespace {

constexpr size_t kMaxCandidates = size_t{1} << 20;

std::string Substitute(std::string frame, const std::string &key,
                       const std::string &value) {
  size_t pos;
  while ((pos = frame.find(key)) != std::string::npos) {
    frame.replace(pos, key.size(), value);
  }
  return frame;
}

bool StartsWithTokens(const std::vector<std::string> &tokens,
                      const std::vector<std::string> &prefix) {
  return prefix.size() <= tokens.size() &&
         std::equal(prefix.begin(), prefix.end(), tokens.begin());
}

bool ContainsWhParticle(const std::vector<std::string> &tokens,
                        const RuleSet &rules) {
  for (const Cue &cue : rules.cues()) {
    if (cue.category != CueCategory::kWh) continue;
    for (size_t i = 0; i + cue.pattern.size() <= tokens.size(); ++i) {
      bool match = true;
      for (size_t k = 0; k < cue.pattern.size() && match; ++k) {
        match = TokenMatches(cue.pattern[k], tokens[i + k]);
      }
      if (match) return true;
    }
  }
  return false;
}

std::multiset<std::string> CanonicalBag(const std::vector<std::string> &tokens,
                                        const RuleSet &rules) {
  std::multiset<std::string> bag;
  for (const std::string &t : tokens) bag.insert(rules.Canonical(t));
  return bag;
}

// A way to voice the head: the wh phrase for nominal heads (empty for
// other heads) and the content with any connector removed.
struct HeadOption {
  std::string wh;
  std::vector<std::string> content;
};

std::vector<HeadOption> HeadOptions(const IntentArgument &arg,
                                    const RuleSet &rules) {
  if (arg.head != Head::kNominal) return {{"", arg.content}};
  std::vector<HeadOption> options;
  for (const Cue &cue : rules.cues()) {
    if (cue.category != CueCategory::kWh || !cue.with.empty()) continue;
    if (cue.nominal != arg.nominal) continue;
    std::vector<std::string> connector = SplitWhitespace(cue.connector);
    if (!StartsWithTokens(arg.content, connector)) continue;
    options.push_back({cue.text, std::vector<std::string>(
                                     arg.content.begin() + connector.size(),
                                     arg.content.end())});
  }
  return options;
}

// Scrambled orders of `tokens`: the original, then for every joiner token
// with material on both sides, the two sides swapped.
std::vector<std::vector<std::string>> ScrambleOptions(
    const std::vector<std::string> &tokens, const RuleSet &rules) {
  std::vector<std::vector<std::string>> out = {tokens};
  for (size_t k = 1; k + 1 < tokens.size(); ++k) {
    if (!rules.scramble_joiners().count(tokens[k])) continue;
    std::vector<std::string> swapped(tokens.begin() + k + 1, tokens.end());
    swapped.push_back(tokens[k]);
    swapped.insert(swapped.end(), tokens.begin(), tokens.begin() + k);
    out.push_back(std::move(swapped));
  }
  return out;
}

}  // namespace

std::vector<int64_t> Apportion(int64_t total,
                               const std::vector<int64_t> &weights) {
  if (total < 0) {
    throw Error(ErrorCode::kInvalidArgument, "cannot apportion a negative total");
  }
  if (weights.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no weights to apportion over");
  }
  __int128 sum = 0;
  for (int64_t w : weights) {
    if (w <= 0) throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
    sum += w;
  }
  std::vector<int64_t> out(weights.size());
  std::vector<__int128> remainder(weights.size());
  int64_t given = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    __int128 share = static_cast<__int128>(total) * weights[i];
    out[i] = static_cast<int64_t>(share / sum);
    remainder[i] = share % sum;
    given += out[i];
  }
  std::vector<size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return remainder[a] > remainder[b];
  });
  for (size_t k = 0; given < total; ++k, ++given) ++out[order[k]];
  return out;
}

int64_t AugmentationPlan::TotalArguments() const {
  int64_t total = 0;
  for (const auto &[type, quota] : quotas) total += quota;
  return total;
}

AugmentationPlan PlanAugmentation(
    const CorpusStats &current, const std::map<SpeechActType, int64_t> &quotas,
    const std::array<int64_t, 5> &weights, int64_t variants_per_argument) {
  if (quotas.empty()) {
    throw Error(ErrorCode::kNothingToPlan, "no quotas given");
  }
  if (variants_per_argument < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "variants per argument must be at least 1");
  }
  AugmentationPlan plan;
  plan.quotas = quotas;
  plan.weights = weights;
  plan.variants_per_argument = variants_per_argument;
  plan.current = current;
  plan.projected = current;
  std::vector<int64_t> w(weights.begin(), weights.end());
  for (const auto &[type, quota] : quotas) {
    if (quota < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative quota for " + std::string(LabelName(type)));
    }
    std::vector<int64_t> shares = Apportion(quota, w);
    std::array<int64_t, 5> row{};
    std::copy(shares.begin(), shares.end(), row.begin());
    plan.allocation[type] = row;
    int64_t pairs = quota * variants_per_argument;
    plan.projected.per_type[LabelCode(type)] += pairs;
    plan.projected.total += pairs;
    for (size_t t = 0; t < row.size(); ++t) {
      plan.projected.per_topic[t] += row[t] * variants_per_argument;
    }
  }
  return plan;
}

std::vector<std::string> InverseCoreference(
    const std::vector<std::string> &tokens, const RuleSet &rules,
    BroadIntent context) {
  // Phrase -> first pronoun surface producing it, longest phrases first.
  std::vector<std::pair<std::vector<std::string>, std::string>> phrases;
  std::set<std::string> seen;
  for (const PronounEntry &p : rules.pronouns()) {
    const std::string &phrase = p.ReplacementFor(context);
    if (phrase.empty() || !seen.insert(phrase).second) continue;
    phrases.emplace_back(SplitWhitespace(phrase), p.surface);
  }
  std::stable_sort(phrases.begin(), phrases.end(),
                   [](const auto &a, const auto &b) {
                     return a.first.size() > b.first.size();
                   });
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < tokens.size()) {
    bool replaced = false;
    for (const auto &[phrase, surface] : phrases) {
      if (pos + phrase.size() > tokens.size()) continue;
      if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + pos)) {
        out.push_back(surface);
        pos += phrase.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(tokens[pos++]);
  }
  return out;
}

bool RoundTrips(const std::string &sentence, const IntentArgument &arg,
                const RuleSet &rules) {
  std::vector<std::string> tokens = SplitWhitespace(Normalize(sentence));
  if (tokens.empty()) return false;
  ClassificationResult result = Classify(tokens, rules);
  if (!result.label) return false;
  bool question = IsQuestionHead(arg.head);
  if ((BroadIntentOf(*result.label) == BroadIntent::kQuestion) != question) {
    return false;
  }
  try {
    IntentArgument back =
        Extract(tokens, *result.label, ExtractionConfig::For(rules));
    return CanonicalBag(back.content, rules) == CanonicalBag(arg.content, rules);
  } catch (const Error &) {
    return false;
  }
}

std::vector<std::string> EnumerateVariants(const IntentArgument &arg,
                                           const RuleSet &rules) {
  if (arg.head == Head::kNominal && ContainsWhParticle(arg.content, rules)) {
    throw Error(ErrorCode::kInvalidArgument,
                "nominal arguments may not contain wh-particles: '" +
                    JoinTokens(arg.content) + "'");
  }
  BroadIntent intent =
      IsQuestionHead(arg.head) ? BroadIntent::kQuestion : BroadIntent::kCommand;
  const std::vector<std::string> &frames = rules.FramesFor(arg.head);
  std::vector<std::string> politeness = {""};
  for (const std::string &p : rules.PolitenessInsertions(intent)) {
    politeness.push_back(p);
  }

  std::vector<std::string> candidates;
  for (const HeadOption &option : HeadOptions(arg, rules)) {
    std::vector<std::string> surface =
        InverseCoreference(option.content, rules, intent);
    std::vector<std::vector<std::string>> slots;
    for (const std::string &t : surface) {
      std::vector<std::string> choices = {t};
      for (std::string &s : rules.SynonymsOf(t)) choices.push_back(std::move(s));
      slots.push_back(std::move(choices));
    }
    for (const std::string &frame : frames) {
      for (const std::string &polite : politeness) {
        std::vector<size_t> pick(slots.size(), 0);
        while (true) {
          std::vector<std::string> tokens;
          for (size_t i = 0; i < slots.size(); ++i) {
            tokens.push_back(slots[i][pick[i]]);
          }
          for (const auto &order : ScrambleOptions(tokens, rules)) {
            if (candidates.size() >= kMaxCandidates) break;
            std::string text = Substitute(frame, "{wh}", option.wh);
            text = Substitute(text, "{}", JoinTokens(order));
            if (!polite.empty()) text = polite + " " + text;
            candidates.push_back(Normalize(text));
          }
          size_t k = 0;
          while (k < pick.size() && ++pick[k] == slots[k].size()) pick[k++] = 0;
          if (k == pick.size()) break;
        }
      }
    }
  }

  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const std::string &c : candidates) {
    if (c.empty() || !seen.insert(c).second) continue;
    if (RoundTrips(c, arg, rules)) out.push_back(c);
  }
  return out;
}

std::vector<std::string> GenerateVariants(const IntentArgument &arg, int64_t n,
                                          const RuleSet &rules, uint64_t seed) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "variant count must be at least 1");
  }
  std::vector<std::string> all = EnumerateVariants(arg, rules);
  if (static_cast<int64_t>(all.size()) < n) {
    throw Error(ErrorCode::kVariantExhausted,
                "requested " + std::to_string(n) + " variants, at most " +
                    std::to_string(all.size()) + " exist");
  }
  SeededRng rng(seed);
  rng.Shuffle(&all);
  all.resize(n);
  return all;
}

}  // namespace intentarg
