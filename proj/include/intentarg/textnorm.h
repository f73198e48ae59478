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

// Text normalization and tokenization. Normalization lowercases bicameral
// scripts, deletes a fixed punctuation set and collapses whitespace.
// Tokenization splits on whitespace by default; morpheme analyzers plug in
// through AnalyzerRegistry.

#ifndef INTENTARG_TEXTNORM_H_
#define INTENTARG_TEXTNORM_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

namespace intentarg {

struct Token {
  std::string surface;
  int index = 0;

  bool operator==(const Token &other) const = default;
};

// Code points deleted by Normalize:  . , ? ! ; : " ' ( ) [ ] …  and the
// typographic quotes ‘ ’ “ ”.
bool IsStrippedPunctuation(char32_t cp);
bool IsUnicodeSpace(char32_t cp);

std::string Normalize(std::string_view text);

// UTF-8 helpers. Malformed bytes decode to themselves (as code points
// 0x80..0xFF) so that no input is ever rejected.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);

class AnalyzerSpec {
 public:
  enum class Kind { kWhitespace, kExternal };

  static AnalyzerSpec Whitespace() { return AnalyzerSpec(Kind::kWhitespace, ""); }
  static AnalyzerSpec External(std::string adapter) {
    return AnalyzerSpec(Kind::kExternal, std::move(adapter));
  }
  // "whitespace" or the name of a registered adapter.
  static AnalyzerSpec FromName(std::string_view name);

  Kind kind() const { return kind_; }
  const std::string &adapter() const { return adapter_; }
  std::string Name() const;

 private:
  AnalyzerSpec(Kind kind, std::string adapter)
      : kind_(kind), adapter_(std::move(adapter)) {}

  Kind kind_;
  std::string adapter_;
};

using AnalyzerFn =
    std::function<std::vector<std::string>(std::string_view normalized)>;

// Registry of external analyzers. Adapters registered with
// thread_safe = false are serialized behind a per-adapter mutex.
class AnalyzerRegistry {
 public:
  static AnalyzerRegistry &Global();

  void Register(const std::string &name, AnalyzerFn fn,
                bool thread_safe = true);
  bool Contains(const std::string &name) const;
  void Unregister(const std::string &name);

  // Runs the adapter; throws AnalyzerUnavailable when not registered.
  std::vector<std::string> Run(const std::string &name,
                               std::string_view text) const;

 private:
  struct Entry {
    AnalyzerFn fn;
    bool thread_safe = true;
    std::unique_ptr<std::mutex> guard;
  };

  mutable std::shared_mutex mu_;
  std::map<std::string, std::shared_ptr<Entry>> entries_;
};

std::vector<std::string> SplitWhitespace(std::string_view text);

std::vector<Token> Tokenize(std::string_view text, const AnalyzerSpec &spec,
                            const AnalyzerRegistry &registry =
                                AnalyzerRegistry::Global());

// Surfaces only.
std::vector<std::string> TokenSurfaces(const std::vector<Token> &tokens);
std::string JoinTokens(const std::vector<std::string> &tokens);

}  // namespace intentarg

#endif  // INTENTARG_TEXTNORM_H_
