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

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "quotesent/textproc.hpp"

namespace quotesent {
namespace {

std::vector<std::vector<std::string>> Aliases(std::initializer_list<const char *> phrases) {
  std::vector<std::vector<std::string>> out;
  for (const char *p : phrases) out.push_back(SplitWhitespace(p));
  return out;
}

std::vector<Token> Blank(std::size_t n) {
  std::vector<Token> t(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i].form = t[i].surface = "w" + std::to_string(i);
    t[i].index = i;
  }
  return t;
}

TEST(TokenizeTest, StripsEdgePunctuation) {
  auto forms = Forms(Tokenize("They have stirred the hornet's nest."));
  EXPECT_EQ(forms, (std::vector<std::string>{"they", "have", "stirred", "the",
                                             "hornet's", "nest"}));
}

TEST(TokenizeTest, EmptyAndPunctuationOnly) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("   \t\n").empty());
  EXPECT_TRUE(Tokenize("—").empty());
  EXPECT_TRUE(Tokenize("... !? -- «»").empty());
}

TEST(TokenizeTest, KeepsInternalPunctuation) {
  auto forms = Forms(Tokenize("\"The British prime-minister,\" (Brown) said: X's plan."));
  EXPECT_EQ(forms, (std::vector<std::string>{"the", "british", "prime-minister", "brown",
                                             "said", "x's", "plan"}));
}

TEST(TokenizeTest, OffsetsAndIndices) {
  std::string text = "  Gordon, “Brown” said—";
  auto tokens = Tokenize(text);
  ASSERT_EQ(tokens.size(), 3u);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    EXPECT_EQ(tokens[i].index, i);
    EXPECT_EQ(text.substr(tokens[i].char_start, tokens[i].char_end - tokens[i].char_start),
              tokens[i].surface);
    if (i > 0) {
      EXPECT_GT(tokens[i].char_start, tokens[i - 1].char_end);
    }
  }
  EXPECT_EQ(tokens[0].surface, "Gordon");
  EXPECT_EQ(tokens[1].surface, "Brown");
  EXPECT_EQ(tokens[1].form, "brown");
  EXPECT_EQ(tokens[2].surface, "said");
}

TEST(TokenizeTest, MalformedUtf8IsKept) {
  std::string text = "bad\xff" "byte ok";
  auto tokens = Tokenize(text);
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].surface, "bad\xff" "byte");
}

TEST(FindMentionsTest, LongestFirstNonOverlapping) {
  auto tokens = Tokenize("Gordon Brown said Brown will act");
  auto spans = FindMentions(tokens, Aliases({"gordon brown", "gordon", "brown"}));
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].start, 0u);
  EXPECT_EQ(spans[0].end, 1u);
  EXPECT_EQ(spans[0].alias, SplitWhitespace("gordon brown"));
  EXPECT_EQ(spans[1].start, 3u);
  EXPECT_EQ(spans[1].end, 3u);
}

TEST(FindMentionsTest, NoMatch) {
  EXPECT_TRUE(FindMentions(Tokenize("Nobody here"), Aliases({"brown"})).empty());
  EXPECT_TRUE(FindMentions(Tokenize(""), Aliases({"brown"})).empty());
}

TEST(FindMentionsTest, TitleAlias) {
  auto tokens = Tokenize("Yesterday the British prime-minister spoke.");
  auto spans = FindMentions(tokens, Aliases({"the british prime-minister", "brown"}));
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0].start, 1u);
  EXPECT_EQ(spans[0].end, 3u);
}

TEST(FindMentionsTest, AdjacentMentions) {
  auto spans = FindMentions(Tokenize("brown brown gordon"), Aliases({"brown", "gordon"}));
  ASSERT_EQ(spans.size(), 3u);
  EXPECT_EQ(spans[2].start, 2u);
}

TEST(WindowSpecTest, Parse) {
  EXPECT_TRUE(WindowSpec::Parse("whole")->whole_text());
  EXPECT_EQ(WindowSpec::Parse("6")->words(), 6u);
  EXPECT_FALSE(WindowSpec::Parse("0").has_value());
  EXPECT_FALSE(WindowSpec::Parse("-3").has_value());
  EXPECT_FALSE(WindowSpec::Parse("six").has_value());
  EXPECT_FALSE(WindowSpec::Parse("").has_value());
  EXPECT_THROW(WindowSpec::Words(0), std::invalid_argument);
  EXPECT_EQ(WindowSpec::Words(10).ToString(), "10");
  EXPECT_LT(WindowSpec::WholeText(), WindowSpec::Words(1));
  EXPECT_LT(WindowSpec::Words(3), WindowSpec::Words(10));
}

TEST(WindowIndicesTest, AroundSingleMention) {
  auto tokens = Blank(10);
  std::vector<MentionSpan> m{{4, 4, {"w4"}}};
  EXPECT_EQ(WindowIndices(tokens, m, WindowSpec::Words(3)),
            (std::vector<std::size_t>{1, 2, 3, 5, 6, 7}));
}

TEST(WindowIndicesTest, ClipsAtBounds) {
  auto tokens = Blank(3);
  std::vector<MentionSpan> m{{0, 0, {"w0"}}};
  EXPECT_EQ(WindowIndices(tokens, m, WindowSpec::Words(3)),
            (std::vector<std::size_t>{1, 2}));
}

TEST(WindowIndicesTest, UnionOfMentionsExcludesMentions) {
  auto tokens = Blank(12);
  std::vector<MentionSpan> m{{2, 3, {"a", "b"}}, {6, 6, {"c"}}};
  EXPECT_EQ(WindowIndices(tokens, m, WindowSpec::Words(2)),
            (std::vector<std::size_t>{0, 1, 4, 5, 7, 8}));
  EXPECT_EQ(WindowIndices(tokens, m, WindowSpec::WholeText()),
            (std::vector<std::size_t>{0, 1, 4, 5, 7, 8, 9, 10, 11}));
}

TEST(WindowIndicesTest, NoMentionsMeansEmpty) {
  auto tokens = Blank(5);
  EXPECT_TRUE(WindowIndices(tokens, {}, WindowSpec::WholeText()).empty());
  EXPECT_TRUE(WindowIndices(tokens, {}, WindowSpec::Words(3)).empty());
}

// Random token sequences over a tiny vocabulary with random alias sets.
TEST(WindowIndicesTest, Properties) {
  std::mt19937 rng(42);
  const std::vector<std::string> vocab = {"a", "b", "c", "d"};
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (int iter = 0; iter < 500; ++iter) {
    std::size_t n = 1 + pick(30);
    std::string text;
    for (std::size_t i = 0; i < n; ++i) text += vocab[pick(vocab.size())] + " ";
    auto tokens = Tokenize(text);
    std::vector<std::vector<std::string>> aliases;
    for (std::size_t a = 0, k = 1 + pick(2); a < k; ++a) {
      std::vector<std::string> alias;
      for (std::size_t j = 0, len = 1 + pick(2); j < len; ++j) alias.push_back(vocab[pick(vocab.size())]);
      aliases.push_back(alias);
    }
    auto mentions = FindMentions(tokens, aliases);
    for (std::size_t i = 1; i < mentions.size(); ++i) {
      EXPECT_GT(mentions[i].start, mentions[i - 1].end);
    }
    for (const auto &m : mentions) {
      ASSERT_LE(m.end, tokens.size() - 1);
      for (std::size_t k = m.start; k <= m.end; ++k) EXPECT_EQ(tokens[k].form, m.alias[k - m.start]);
    }
    std::vector<std::size_t> prev;
    for (std::size_t w = 1; w <= 12; ++w) {
      auto cur = WindowIndices(tokens, mentions, WindowSpec::Words(w));
      EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      for (std::size_t i : cur) {
        for (const auto &m : mentions) EXPECT_FALSE(m.Contains(i));
      }
      prev = cur;
    }
    EXPECT_EQ(WindowIndices(tokens, mentions, WindowSpec::Words(tokens.size())),
              WindowIndices(tokens, mentions, WindowSpec::WholeText()));
  }
}

}  // namespace
}  // namespace quotesent
