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

#include "intentarg/textnorm.h"

#include "intentarg/errors.h"

namespace intentarg {
namespace {

char32_t ToLower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp < 0xC0) return cp;
  // Latin-1 supplement, except the multiplication sign.
  if (cp <= 0xDE) return cp == 0xD7 ? cp : cp + 32;
  // Latin Extended-A pairs (even upper, odd lower) with the 0x139..0x148 and
  // 0x179..0x17E ranges shifted by one.
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
  if (cp == 0x178) return 0xFF;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
  // Greek.
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 32;
  // Cyrillic.
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;
  // Fullwidth Latin.
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 32;
  return cp;
}

}  // namespace

bool IsStrippedPunctuation(char32_t cp) {
  switch (cp) {
    case U'.': case U',': case U'?': case U'!': case U';': case U':':
    case U'"': case U'\'': case U'(': case U')': case U'[': case U']':
    case U'…': case U'‘': case U'’': case U'“':
    case U'”':
      return true;
    default:
      return false;
  }
}

bool IsUnicodeSpace(char32_t cp) {
  return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 ||
         cp == 0xA0 || cp == 0x1680 || (cp >= 0x2000 && cp <= 0x200A) ||
         cp == 0x2028 || cp == 0x2029 || cp == 0x202F || cp == 0x205F ||
         cp == 0x3000;
}

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    unsigned char c = text[i];
    int extra = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      out.push_back(c);
      ++i;
      continue;
    }
    if (i + extra >= text.size()) {
      out.push_back(c);
      ++i;
      continue;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      unsigned char cc = text[i + k];
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(c);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::string Normalize(std::string_view text) {
  std::u32string out;
  bool pending_space = false;
  for (char32_t cp : DecodeUtf8(text)) {
    if (IsStrippedPunctuation(cp)) continue;
    if (IsUnicodeSpace(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(ToLower(cp));
  }
  return EncodeUtf8(out);
}

AnalyzerSpec AnalyzerSpec::FromName(std::string_view name) {
  if (name.empty() || name == "whitespace") return Whitespace();
  return External(std::string(name));
}

std::string AnalyzerSpec::Name() const {
  return kind_ == Kind::kWhitespace ? "whitespace" : adapter_;
}

AnalyzerRegistry &AnalyzerRegistry::Global() {
  static AnalyzerRegistry *registry = new AnalyzerRegistry();
  return *registry;
}

void AnalyzerRegistry::Register(const std::string &name, AnalyzerFn fn,
                                bool thread_safe) {
  auto entry = std::make_shared<Entry>();
  entry->fn = std::move(fn);
  entry->thread_safe = thread_safe;
  if (!thread_safe) entry->guard = std::make_unique<std::mutex>();
  std::unique_lock lock(mu_);
  entries_[name] = std::move(entry);
}

bool AnalyzerRegistry::Contains(const std::string &name) const {
  std::shared_lock lock(mu_);
  return entries_.count(name) > 0;
}

void AnalyzerRegistry::Unregister(const std::string &name) {
  std::unique_lock lock(mu_);
  entries_.erase(name);
}

std::vector<std::string> AnalyzerRegistry::Run(const std::string &name,
                                               std::string_view text) const {
  std::shared_ptr<Entry> entry;
  {
    std::shared_lock lock(mu_);
    auto it = entries_.find(name);
    if (it == entries_.end()) {
      throw Error(ErrorCode::kAnalyzerUnavailable,
                  "no analyzer registered under '" + name + "'");
    }
    entry = it->second;
  }
  if (entry->thread_safe) return entry->fn(text);
  std::lock_guard<std::mutex> lock(*entry->guard);
  return entry->fn(text);
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::u32string current;
  for (char32_t cp : DecodeUtf8(text)) {
    if (IsUnicodeSpace(cp)) {
      if (!current.empty()) out.push_back(EncodeUtf8(current));
      current.clear();
    } else {
      current.push_back(cp);
    }
  }
  if (!current.empty()) out.push_back(EncodeUtf8(current));
  return out;
}

std::vector<Token> Tokenize(std::string_view text, const AnalyzerSpec &spec,
                            const AnalyzerRegistry &registry) {
  std::vector<std::string> surfaces;
  if (spec.kind() == AnalyzerSpec::Kind::kWhitespace) {
    surfaces = SplitWhitespace(text);
  } else {
    // Adapters may return pieces with inner spaces or empty strings; those
    // are re-split so every token stays whitespace-free and non-empty.
    for (const std::string &piece : registry.Run(spec.adapter(), text)) {
      for (std::string &s : SplitWhitespace(piece)) {
        surfaces.push_back(std::move(s));
      }
    }
  }
  std::vector<Token> tokens;
  tokens.reserve(surfaces.size());
  for (size_t i = 0; i < surfaces.size(); ++i) {
    tokens.push_back({std::move(surfaces[i]), static_cast<int>(i)});
  }
  return tokens;
}

std::vector<std::string> TokenSurfaces(const std::vector<Token> &tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token &t : tokens) out.push_back(t.surface);
  return out;
}

std::string JoinTokens(const std::vector<std::string> &tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

}  // namespace intentarg
