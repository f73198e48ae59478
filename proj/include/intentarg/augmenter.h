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

// Augmentation planning and a mechanical variant generator.
//
// The planner spreads per-type argument quotas over topics by
// largest-remainder apportionment. The generator composes frame wrapping,
// politeness insertion, synonym substitution and clause scrambling, and
// keeps only candidates that classify to the argument's broad intent and
// re-extract to the same content.

#ifndef INTENTARG_AUGMENTER_H_
#define INTENTARG_AUGMENTER_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "intentarg/corpus.h"
#include "intentarg/rules.h"
#include "intentarg/types.h"

namespace intentarg {

// Splits `total` over `weights` (all positive): floors of the exact shares,
// then one extra unit each to the largest remainders, lower index first on
// ties.
std::vector<int64_t> Apportion(int64_t total,
                               const std::vector<int64_t> &weights);

struct AugmentationPlan {
  std::map<SpeechActType, int64_t> quotas;
  std::map<SpeechActType, std::array<int64_t, 5>> allocation;
  std::array<int64_t, 5> weights{};
  int64_t variants_per_argument = 10;
  CorpusStats current;
  CorpusStats projected;

  int64_t TotalArguments() const;
  int64_t TotalPairs() const { return TotalArguments() * variants_per_argument; }
};

AugmentationPlan PlanAugmentation(
    const CorpusStats &current, const std::map<SpeechActType, int64_t> &quotas,
    const std::array<int64_t, 5> &weights = {1, 1, 1, 1, 4},
    int64_t variants_per_argument = 10);

// Replaces referent phrases with the first pronoun that produces them in
// the given context ("the addressee" -> "you").
std::vector<std::string> InverseCoreference(
    const std::vector<std::string> &tokens, const RuleSet &rules,
    BroadIntent context);

// True when `sentence` classifies to the broad intent of `arg.head` and
// re-extracts to the same content tokens, as a multiset, after synonym
// canonicalization.
bool RoundTrips(const std::string &sentence, const IntentArgument &arg,
                const RuleSet &rules);

// Every distinct candidate that round-trips, in a fixed enumeration order.
std::vector<std::string> EnumerateVariants(const IntentArgument &arg,
                                           const RuleSet &rules);

// n distinct variants drawn by a seeded shuffle of EnumerateVariants().
// Throws VariantExhausted when fewer than n exist.
std::vector<std::string> GenerateVariants(const IntentArgument &arg, int64_t n,
                                          const RuleSet &rules, uint64_t seed);

}  // namespace intentarg

#endif  // INTENTARG_AUGMENTER_H_
