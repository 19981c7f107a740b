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

// Sentiment lexicons in the four-class integer scheme: loading, graded
// resource conversion, merging and serialization.

#ifndef QUOTESENT_LEXICON_HPP_
#define QUOTESENT_LEXICON_HPP_

#include <cerrno>
#include <cstdlib>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quotesent/base.hpp"

namespace quotesent {

enum class PolarityClass { kPositive, kNegative, kHighPositive, kHighNegative };

inline constexpr PolarityClass kAllPolarityClasses[] = {
    PolarityClass::kPositive, PolarityClass::kNegative,
    PolarityClass::kHighPositive, PolarityClass::kHighNegative};

constexpr int ScoreOf(PolarityClass c) {
  switch (c) {
    case PolarityClass::kPositive: return 1;
    case PolarityClass::kNegative: return -1;
    case PolarityClass::kHighPositive: return 4;
    case PolarityClass::kHighNegative: return -4;
  }
  return 0;
}

// The class with the same strength and opposite sign.
constexpr PolarityClass Mirror(PolarityClass c) {
  switch (c) {
    case PolarityClass::kPositive: return PolarityClass::kNegative;
    case PolarityClass::kNegative: return PolarityClass::kPositive;
    case PolarityClass::kHighPositive: return PolarityClass::kHighNegative;
    case PolarityClass::kHighNegative: return PolarityClass::kHighPositive;
  }
  return c;
}

constexpr std::string_view ClassName(PolarityClass c) {
  switch (c) {
    case PolarityClass::kPositive: return "POSITIVE";
    case PolarityClass::kNegative: return "NEGATIVE";
    case PolarityClass::kHighPositive: return "HIGH_POSITIVE";
    case PolarityClass::kHighNegative: return "HIGH_NEGATIVE";
  }
  return "";
}

inline std::optional<PolarityClass> ParseClass(std::string_view token) {
  for (PolarityClass c : kAllPolarityClasses) {
    if (ClassName(c) == token) return c;
  }
  return std::nullopt;
}

// Maps a summed score back onto the four classes: >= 2 is high positive,
// <= -2 high negative, +-1 plain. Zero has no class.
constexpr std::optional<PolarityClass> ClassForSum(int sum) {
  if (sum >= 2) return PolarityClass::kHighPositive;
  if (sum == 1) return PolarityClass::kPositive;
  if (sum == -1) return PolarityClass::kNegative;
  if (sum <= -2) return PolarityClass::kHighNegative;
  return std::nullopt;
}

struct LexiconEntry {
  std::vector<std::string> surface;  // lowercase word forms, n >= 1
  PolarityClass polarity = PolarityClass::kPositive;
  std::string source_id;

  int score() const { return ScoreOf(polarity); }
  std::string key() const { return Join(surface, " "); }

  bool operator==(const LexiconEntry &) const = default;
};

class Lexicon {
 public:
  using EntryMap = std::map<std::string, LexiconEntry, std::less<>>;

  Lexicon() = default;
  explicit Lexicon(std::string name) : name_(std::move(name)) {}

  const std::string &name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Adds an entry, normalizing its forms to lowercase. Returns false and
  // leaves the lexicon unchanged if the surface is already present. Throws
  // std::invalid_argument for an empty surface or a form that is empty or
  // contains whitespace.
  bool Insert(LexiconEntry entry) {
    if (entry.surface.empty()) {
      throw std::invalid_argument("lexicon entry has an empty surface");
    }
    for (auto &form : entry.surface) {
      if (form.empty()) {
        throw std::invalid_argument("lexicon entry has an empty word form");
      }
      for (char c : form) {
        if (IsAsciiSpace(c)) {
          throw std::invalid_argument("word form contains whitespace: '" +
                                      form + "'");
        }
      }
      form = AsciiLower(form);
    }
    std::string key = entry.key();
    std::size_t words = entry.surface.size();
    auto [it, inserted] = entries_.try_emplace(std::move(key), std::move(entry));
    if (inserted) max_words_ = std::max(max_words_, words);
    return inserted;
  }

  // Lookup by space-joined lowercase surface.
  const LexiconEntry *Find(std::string_view key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool Contains(std::string_view key) const { return Find(key) != nullptr; }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Word count of the longest entry; 0 for an empty lexicon.
  std::size_t max_words() const { return max_words_; }

  // Entries in ascending surface order.
  const EntryMap &entries() const { return entries_; }

  std::size_t CountClass(PolarityClass c) const {
    std::size_t n = 0;
    for (const auto &[key, e] : entries_) n += e.polarity == c;
    return n;
  }

 private:
  std::string name_;
  EntryMap entries_;
  std::size_t max_words_ = 0;
};

// Copy of `lexicon` with every class replaced by its mirror.
inline Lexicon MirrorLexicon(const Lexicon &lexicon) {
  Lexicon out(lexicon.name());
  for (const auto &[key, e] : lexicon.entries()) {
    LexiconEntry m = e;
    m.polarity = Mirror(e.polarity);
    out.Insert(std::move(m));
  }
  return out;
}

// Parses the four-class table format: `surface<TAB>CLASS` per line, with
// `#` comment lines and blank lines ignored. `file` labels error messages.
inline Lexicon ParseLexicon(std::istream &in, const std::string &name,
                            const std::string &file) {
  Lexicon lexicon(name);
  std::map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ChompCr(line);
    if (Trim(line).empty() || line.front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 2) {
      throw InputError(file, line_no,
                       "expected 'surface<TAB>CLASS', found " +
                           std::to_string(fields.size()) + " field(s)");
    }
    auto forms = SplitWhitespace(AsciiLower(fields[0]));
    if (forms.empty()) throw InputError(file, line_no, "empty surface");
    auto polarity = ParseClass(Trim(fields[1]));
    if (!polarity) {
      throw InputError(file, line_no,
                       "unknown class '" + std::string(Trim(fields[1])) + "'");
    }
    LexiconEntry entry{forms, *polarity, name};
    std::string key = entry.key();
    if (!lexicon.Insert(std::move(entry))) {
      throw InputError(file, line_no,
                       "duplicate surface '" + key + "' (first seen on line " +
                           std::to_string(first_line[key]) + ")");
    }
    first_line[key] = line_no;
  }
  return lexicon;
}

// Loads a four-class lexicon file. The lexicon is named after the file stem.
inline Lexicon LoadLexicon(const std::string &path) {
  auto in = OpenInput(path);
  return ParseLexicon(in, std::filesystem::path(path).stem().string(), path);
}

// Writes entries in ascending surface order; the output parses back to an
// identical lexicon.
inline void WriteLexicon(std::ostream &out, const Lexicon &lexicon) {
  for (const auto &[key, e] : lexicon.entries()) {
    out << key << '\t' << ClassName(e.polarity) << '\n';
  }
}

// A word or phrase from a resource with real-valued polarity scores
// (SentiWordNet style).
struct GradedEntry {
  std::vector<std::string> surface;
  double positivity = 0.0;
  double negativity = 0.0;
};

inline std::vector<GradedEntry> ParseGraded(std::istream &in,
                                            const std::string &file) {
  auto parse_real = [&](std::string_view text, std::size_t line_no,
                        const char *what) {
    std::string s(Trim(text));
    char *end = nullptr;
    errno = 0;
    double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || errno != 0) {
      throw InputError(file, line_no,
                       std::string("bad ") + what + " value '" + s + "'");
    }
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InputError(file, line_no,
                       std::string(what) + " must be in [0, 1], got " + s);
    }
    return v;
  };

  std::vector<GradedEntry> entries;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ChompCr(line);
    if (Trim(line).empty() || line.front() == '#') continue;
    auto fields = Split(line, '\t');
    if (fields.size() != 3) {
      throw InputError(file, line_no,
                       "expected 'surface<TAB>positivity<TAB>negativity'");
    }
    GradedEntry e;
    e.surface = SplitWhitespace(AsciiLower(fields[0]));
    if (e.surface.empty()) throw InputError(file, line_no, "empty surface");
    e.positivity = parse_real(fields[1], line_no, "positivity");
    e.negativity = parse_real(fields[2], line_no, "negativity");
    if (!seen.insert(Join(e.surface, " ")).second) {
      throw InputError(file, line_no,
                       "duplicate surface '" + Join(e.surface, " ") + "'");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

inline std::vector<GradedEntry> LoadGraded(const std::string &path) {
  auto in = OpenInput(path);
  return ParseGraded(in, path);
}

struct ConversionReport {
  Lexicon lexicon;
  std::vector<std::string> dropped;  // surfaces with positivity == negativity
};

// Maps graded entries onto the four classes. The larger of positivity and
// negativity decides the sign; the class is HIGH_* when that value reaches
// `high_threshold`. Ties are dropped and listed in the report.
inline ConversionReport ConvertGraded(std::span<const GradedEntry> entries,
                                      double high_threshold,
                                      std::string name = "graded") {
  if (!(high_threshold > 0.0 && high_threshold <= 1.0)) {
    throw InputError("high threshold must be in (0, 1], got " +
                     std::to_string(high_threshold));
  }
  ConversionReport report{Lexicon(name), {}};
  for (const auto &g : entries) {
    std::string key = Join(g.surface, " ");
    if (g.positivity == g.negativity) {
      report.dropped.push_back(key);
      continue;
    }
    bool positive = g.positivity > g.negativity;
    double dominant = positive ? g.positivity : g.negativity;
    bool high = dominant >= high_threshold;
    PolarityClass c = positive ? (high ? PolarityClass::kHighPositive
                                       : PolarityClass::kPositive)
                               : (high ? PolarityClass::kHighNegative
                                       : PolarityClass::kNegative);
    if (!report.lexicon.Insert(LexiconEntry{g.surface, c, name})) {
      throw InputError("duplicate graded surface '" + key + "'");
    }
  }
  return report;
}

enum class MergeStrategy { kPriorityFirst, kAdditive };

constexpr std::string_view StrategyName(MergeStrategy s) {
  return s == MergeStrategy::kAdditive ? "additive" : "priority-first";
}

inline std::optional<MergeStrategy> ParseStrategy(std::string_view s) {
  if (s == "priority-first") return MergeStrategy::kPriorityFirst;
  if (s == "additive") return MergeStrategy::kAdditive;
  return std::nullopt;
}

// Combines lexicons into one.
//
// priority-first: each surface takes its entry from the earliest lexicon
// that has it.
// additive: each surface's score is the sum over all lexicons that have it,
// mapped back with ClassForSum; surfaces summing to zero are dropped.
//
// The result is named "<a>+<b>+...[<strategy>]".
inline Lexicon Merge(std::span<const Lexicon> lexicons,
                     MergeStrategy strategy) {
  if (lexicons.empty()) throw InputError("merge needs at least one lexicon");
  std::vector<std::string> names;
  for (const auto &l : lexicons) names.push_back(l.name());
  Lexicon out(Join(names, "+") + "[" + std::string(StrategyName(strategy)) +
              "]");

  if (strategy == MergeStrategy::kPriorityFirst) {
    for (const auto &l : lexicons) {
      for (const auto &[key, e] : l.entries()) out.Insert(e);
    }
    return out;
  }

  struct Acc {
    std::vector<std::string> surface;
    int sum = 0;
    std::vector<std::string> sources;
  };
  std::map<std::string, Acc> sums;
  for (const auto &l : lexicons) {
    for (const auto &[key, e] : l.entries()) {
      Acc &acc = sums[key];
      acc.surface = e.surface;
      acc.sum += e.score();
      acc.sources.push_back(e.source_id);
    }
  }
  for (auto &[key, acc] : sums) {
    if (auto c = ClassForSum(acc.sum)) {
      out.Insert(LexiconEntry{std::move(acc.surface), *c,
                              Join(acc.sources, "+")});
    }
  }
  return out;
}

}  // namespace quotesent

#endif  // QUOTESENT_LEXICON_HPP_
