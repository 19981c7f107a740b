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

// Target-centred quote scoring: lexicon matches inside the word windows
// around target mentions, optional alert-word filtering, summed scores and
// the three-way decision.

#ifndef QUOTESENT_SCORER_HPP_
#define QUOTESENT_SCORER_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quotesent/base.hpp"
#include "quotesent/category_filter.hpp"
#include "quotesent/corpus.hpp"
#include "quotesent/lexicon.hpp"
#include "quotesent/textproc.hpp"

namespace quotesent {

struct ScoreConfig {
  WindowSpec window = WindowSpec::Words(6);
  bool alerts_filter = false;  // drop hits that are category words
  FilterMode filter_mode = FilterMode::kTaggedOnly;
  int tau = 0;  // |total| <= tau is objective

  bool operator==(const ScoreConfig &) const = default;
};

struct Hit {
  std::size_t token_start = 0;  // inclusive
  std::size_t token_end = 0;
  std::string surface;
  PolarityClass polarity = PolarityClass::kPositive;
  int score = 0;
  bool filtered = false;  // removed as a category word; contributes 0

  bool operator==(const Hit &) const = default;
};

enum class Outcome { kScored, kTargetNotFound };

struct ScoreBreakdown {
  std::string quote_id;
  std::vector<MentionSpan> mentions;
  WindowSpec window = WindowSpec::WholeText();
  std::vector<std::size_t> window_indices;
  std::vector<Hit> hits;
  int total = 0;
  Outcome outcome = Outcome::kTargetNotFound;

  bool operator==(const ScoreBreakdown &) const = default;
};

enum class Classification { kPositive, kNegative, kObjective, kTargetNotFound };

constexpr std::string_view ClassificationName(Classification c) {
  switch (c) {
    case Classification::kPositive: return "positive";
    case Classification::kNegative: return "negative";
    case Classification::kObjective: return "objective";
    case Classification::kTargetNotFound: return "target_not_found";
  }
  return "";
}

// The gold label a classification corresponds to; none for
// kTargetNotFound.
constexpr std::optional<Label> AsLabel(Classification c) {
  switch (c) {
    case Classification::kPositive: return Label::kPositive;
    case Classification::kNegative: return Label::kNegative;
    case Classification::kObjective: return Label::kObjective;
    case Classification::kTargetNotFound: return std::nullopt;
  }
  return std::nullopt;
}

// Greedy lexicon matching over the window. Window positions are visited in
// index order; at each one the longest lexicon surface whose tokens are all
// consecutive window positions wins, and scanning resumes after it.
inline std::vector<Hit> MatchHits(std::span<const Token> tokens,
                                  std::span<const std::size_t> window,
                                  const Lexicon &lexicon) {
  std::vector<Hit> hits;
  if (lexicon.empty() || window.empty()) return hits;
  const std::size_t n = tokens.size();
  std::vector<char> in(n, 0);
  for (std::size_t i : window) {
    if (i < n) in[i] = 1;
  }
  std::size_t next_free = 0;
  std::string key;
  for (std::size_t i : window) {
    if (i >= n || i < next_free) continue;
    std::size_t run = 0;
    while (i + run < n && in[i + run] && run < lexicon.max_words()) ++run;
    for (std::size_t len = run; len >= 1; --len) {
      key = tokens[i].form;
      for (std::size_t k = 1; k < len; ++k) {
        key += ' ';
        key += tokens[i + k].form;
      }
      if (const LexiconEntry *e = lexicon.Find(key)) {
        hits.push_back(Hit{i, i + len - 1, e->key(), e->polarity, e->score(),
                           false});
        next_free = i + len;
        break;
      }
    }
  }
  return hits;
}

// Scores pre-tokenized text for `target` and the quote's categories.
inline ScoreBreakdown ScoreTokens(std::string quote_id,
                                  std::span<const Token> tokens,
                                  const TargetSpec &target,
                                  std::span<const std::string> categories,
                                  const Lexicon &lexicon,
                                  const CategoryDefs &defs,
                                  const ScoreConfig &config) {
  ScoreBreakdown b;
  b.quote_id = std::move(quote_id);
  b.window = config.window;
  b.mentions = FindMentions(tokens, target);
  if (b.mentions.empty()) {
    b.outcome = Outcome::kTargetNotFound;
    return b;
  }
  b.outcome = Outcome::kScored;
  b.window_indices = WindowIndices(tokens, b.mentions, config.window);
  b.hits = MatchHits(tokens, b.window_indices, lexicon);
  for (auto &h : b.hits) {
    if (config.alerts_filter &&
        IsCategoryWord(h.surface, categories, defs, config.filter_mode)) {
      h.filtered = true;
    }
    if (!h.filtered) b.total += h.score;
  }
  return b;
}

inline ScoreBreakdown ScoreQuote(const Quote &quote, const Lexicon &lexicon,
                                 const CategoryDefs &defs,
                                 const ScoreConfig &config) {
  auto tokens = Tokenize(quote.text);
  return ScoreTokens(quote.id, tokens, quote.target, quote.categories, lexicon,
                     defs, config);
}

inline Classification Classify(const ScoreBreakdown &b, int tau = 0) {
  if (tau < 0) throw std::invalid_argument("tau must be non-negative");
  if (b.outcome == Outcome::kTargetNotFound) {
    return Classification::kTargetNotFound;
  }
  if (b.total > tau) return Classification::kPositive;
  if (b.total < -tau) return Classification::kNegative;
  return Classification::kObjective;
}

constexpr std::string_view OutcomeName(Outcome o) {
  return o == Outcome::kScored ? "scored" : "target_not_found";
}

// The `classify --explain` payload for one quote.
inline nlohmann::ordered_json BreakdownToJson(const ScoreBreakdown &b) {
  nlohmann::ordered_json out;
  out["id"] = b.quote_id;
  out["outcome"] = std::string(OutcomeName(b.outcome));
  out["window"] = b.window.ToString();
  auto mentions = nlohmann::ordered_json::array();
  for (const auto &m : b.mentions) {
    nlohmann::ordered_json j;
    j["start"] = m.start;
    j["end"] = m.end;
    j["alias"] = Join(m.alias, " ");
    mentions.push_back(std::move(j));
  }
  out["mentions"] = std::move(mentions);
  out["window_tokens"] = b.window_indices;
  auto hits = nlohmann::ordered_json::array();
  for (const auto &h : b.hits) {
    nlohmann::ordered_json j;
    j["start"] = h.token_start;
    j["end"] = h.token_end;
    j["surface"] = h.surface;
    j["class"] = std::string(ClassName(h.polarity));
    j["score"] = h.score;
    j["filtered"] = h.filtered;
    hits.push_back(std::move(j));
  }
  out["hits"] = std::move(hits);
  out["total"] = b.total;
  return out;
}

}  // namespace quotesent

#endif  // QUOTESENT_SCORER_HPP_
