// Copyright 2026 The quotesent Authors.
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

// Tokenization, target mention lookup and word windows around mentions.

#ifndef QUOTESENT_TEXTPROC_HPP_
#define QUOTESENT_TEXTPROC_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quotesent/base.hpp"

namespace quotesent {

struct Token {
  std::string surface;  // slice of the original text
  std::string form;     // lowercased surface
  std::size_t index = 0;
  std::size_t char_start = 0;  // byte offsets into the text, end exclusive
  std::size_t char_end = 0;

  bool operator==(const Token &) const = default;
};

namespace internal {

// Decodes one UTF-8 sequence at `pos`. Malformed input decodes as U+FFFD
// consuming a single byte.
inline char32_t DecodeUtf8(std::string_view s, std::size_t pos,
                           std::size_t *length) {
  auto byte = [&](std::size_t i) {
    return static_cast<unsigned char>(s[i]);
  };
  unsigned char b0 = byte(pos);
  auto continuation = [&](std::size_t n) {
    for (std::size_t i = 1; i <= n; ++i) {
      if (pos + i >= s.size() || (byte(pos + i) & 0xC0) != 0x80) return false;
    }
    return true;
  };
  if (b0 < 0x80) {
    *length = 1;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0 && continuation(1)) {
    *length = 2;
    return ((b0 & 0x1F) << 6) | (byte(pos + 1) & 0x3F);
  }
  if ((b0 & 0xF0) == 0xE0 && continuation(2)) {
    *length = 3;
    return ((b0 & 0x0F) << 12) | ((byte(pos + 1) & 0x3F) << 6) |
           (byte(pos + 2) & 0x3F);
  }
  if ((b0 & 0xF8) == 0xF0 && continuation(3)) {
    *length = 4;
    return ((b0 & 0x07) << 18) | ((byte(pos + 1) & 0x3F) << 12) |
           ((byte(pos + 2) & 0x3F) << 6) | (byte(pos + 3) & 0x3F);
  }
  *length = 1;
  return 0xFFFD;
}

inline bool IsSpaceCodepoint(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v' || c == 0x00A0 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x202F || c == 0x205F || c == 0x3000;
}

// ASCII punctuation plus the common Latin-1, General Punctuation and CJK
// punctuation code points.
inline bool IsPunctCodepoint(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  if (c >= 0xA1 && c <= 0xBF) {
    switch (c) {
      case 0xAA: case 0xB2: case 0xB3: case 0xB5: case 0xB9: case 0xBA:
      case 0xBC: case 0xBD: case 0xBE:
        return false;
      default:
        return true;
    }
  }
  return (c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E) ||
         (c >= 0x3001 && c <= 0x3003) || (c >= 0x3008 && c <= 0x3011) ||
         (c >= 0x3014 && c <= 0x301F);
}

}  // namespace internal

// Splits on whitespace, strips leading and trailing punctuation from each
// piece and drops pieces that end up empty. Punctuation inside a token
// (hyphens, apostrophes) is kept.
inline std::vector<Token> Tokenize(std::string_view text) {
  struct Cp {
    char32_t c;
    std::size_t start, end;
  };
  std::vector<Token> tokens;
  std::vector<Cp> piece;
  auto flush = [&] {
    std::size_t b = 0, e = piece.size();
    while (b < e && internal::IsPunctCodepoint(piece[b].c)) ++b;
    while (e > b && internal::IsPunctCodepoint(piece[e - 1].c)) --e;
    if (b < e) {
      Token t;
      t.char_start = piece[b].start;
      t.char_end = piece[e - 1].end;
      t.surface = std::string(text.substr(t.char_start, t.char_end - t.char_start));
      t.form = AsciiLower(t.surface);
      t.index = tokens.size();
      tokens.push_back(std::move(t));
    }
    piece.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t len = 1;
    char32_t c = internal::DecodeUtf8(text, pos, &len);
    if (internal::IsSpaceCodepoint(c)) {
      flush();
    } else {
      piece.push_back({c, pos, pos + len});
    }
    pos += len;
  }
  flush();
  return tokens;
}

inline std::vector<std::string> Forms(std::span<const Token> tokens) {
  std::vector<std::string> forms;
  forms.reserve(tokens.size());
  for (const auto &t : tokens) forms.push_back(t.form);
  return forms;
}

// Normalized word-form sequence of a name or phrase, using the same rules
// as Tokenize so aliases line up with token forms.
inline std::vector<std::string> PhraseForms(std::string_view phrase) {
  return Forms(Tokenize(phrase));
}

struct MentionSpan {
  std::size_t start = 0;  // inclusive token range
  std::size_t end = 0;
  std::vector<std::string> alias;

  bool Contains(std::size_t i) const { return i >= start && i <= end; }
  bool operator==(const MentionSpan &) const = default;
};

// Left-to-right scan that tries aliases longest first at every position.
// Matches never overlap; after a match the scan resumes past it.
inline std::vector<MentionSpan> FindMentions(
    std::span<const Token> tokens,
    std::span<const std::vector<std::string>> aliases) {
  std::vector<const std::vector<std::string> *> ordered;
  for (const auto &a : aliases) {
    if (!a.empty()) ordered.push_back(&a);
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto *a, const auto *b) {
    if (a->size() != b->size()) return a->size() > b->size();
    return *a < *b;
  });

  std::vector<MentionSpan> spans;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::vector<std::string> *hit = nullptr;
    for (const auto *alias : ordered) {
      if (i + alias->size() > tokens.size()) continue;
      bool match = true;
      for (std::size_t k = 0; k < alias->size(); ++k) {
        if (tokens[i + k].form != (*alias)[k]) {
          match = false;
          break;
        }
      }
      if (match) {
        hit = alias;
        break;
      }
    }
    if (hit) {
      spans.push_back({i, i + hit->size() - 1, *hit});
      i += hit->size();
    } else {
      ++i;
    }
  }
  return spans;
}

// Either the whole quote or a symmetric window of `words` tokens around each
// mention.
class WindowSpec {
 public:
  static WindowSpec WholeText() { return WindowSpec(0); }

  static WindowSpec Words(std::size_t w) {
    if (w == 0) throw std::invalid_argument("window size must be >= 1");
    return WindowSpec(w);
  }

  // Accepts "whole" or a positive integer.
  static std::optional<WindowSpec> Parse(std::string_view s) {
    if (s == "whole") return WholeText();
    if (s.empty() || s.size() > 9) return std::nullopt;
    std::size_t w = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      w = w * 10 + static_cast<std::size_t>(c - '0');
    }
    if (w == 0) return std::nullopt;
    return Words(w);
  }

  bool whole_text() const { return words_ == 0; }
  std::size_t words() const { return words_; }

  std::string ToString() const {
    return whole_text() ? "whole" : std::to_string(words_);
  }

  // Whole text sorts first, then ascending window size.
  bool operator<(const WindowSpec &o) const {
    if (whole_text() != o.whole_text()) return whole_text();
    return words_ < o.words_;
  }
  bool operator==(const WindowSpec &) const = default;

 private:
  explicit WindowSpec(std::size_t w) : words_(w) {}
  std::size_t words_;
};

// Sorted token indices that fall inside the window. Mention tokens are never
// included. No mentions means an empty window.
inline std::vector<std::size_t> WindowIndices(
    std::span<const Token> tokens, std::span<const MentionSpan> mentions,
    const WindowSpec &spec) {
  std::vector<std::size_t> out;
  if (mentions.empty() || tokens.empty()) return out;
  const std::size_t n = tokens.size();
  std::vector<char> in(n, spec.whole_text() ? 1 : 0);
  if (!spec.whole_text()) {
    const std::size_t w = spec.words();
    for (const auto &m : mentions) {
      std::size_t lo = m.start >= w ? m.start - w : 0;
      std::size_t hi = std::min(n - 1, m.end + w);
      std::fill(in.begin() + lo, in.begin() + hi + 1, 1);
    }
  }
  for (const auto &m : mentions) {
    for (std::size_t i = m.start; i <= m.end && i < n; ++i) in[i] = 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (in[i]) out.push_back(i);
  }
  return out;
}

}  // namespace quotesent

#endif  // QUOTESENT_TEXTPROC_HPP_
