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

// Annotated quote corpora: targets and their aliases, corpus and annotation
// file I/O, and inter-annotator agreement.

#ifndef QUOTESENT_CORPUS_HPP_
#define QUOTESENT_CORPUS_HPP_

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "quotesent/base.hpp"
#include "quotesent/textproc.hpp"

namespace quotesent {

enum class Label { kPositive = 0, kNegative = 1, kObjective = 2 };

inline constexpr Label kAllLabels[] = {Label::kPositive, Label::kNegative,
                                       Label::kObjective};

constexpr std::size_t LabelIndex(Label l) { return static_cast<std::size_t>(l); }

constexpr std::string_view LabelName(Label l) {
  switch (l) {
    case Label::kPositive: return "positive";
    case Label::kNegative: return "negative";
    case Label::kObjective: return "objective";
  }
  return "";
}

inline std::optional<Label> ParseLabel(std::string_view s) {
  for (Label l : kAllLabels) {
    if (LabelName(l) == s) return l;
  }
  return std::nullopt;
}

namespace internal {

inline std::size_t CodepointCount(std::string_view s) {
  std::size_t n = 0;
  for (char c : s) n += (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  return n;
}

inline void SortUnique(std::vector<std::vector<std::string>> &v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace internal

// Name-based aliases: the full token sequence plus the first and last
// tokens, lowercased. Single tokens shorter than two characters are not
// used on their own ("W Bush" gives "w bush" and "bush").
inline std::vector<std::vector<std::string>> DeriveAliases(
    std::string_view canonical_name) {
  std::vector<std::vector<std::string>> aliases;
  auto forms = PhraseForms(canonical_name);
  if (forms.empty()) return aliases;
  aliases.push_back(forms);
  if (forms.size() > 1) {
    for (const auto &part : {forms.front(), forms.back()}) {
      if (internal::CodepointCount(part) >= 2) aliases.push_back({part});
    }
  }
  internal::SortUnique(aliases);
  return aliases;
}

struct TargetSpec {
  std::string canonical_name;
  // Word-form sequences that count as a mention, sorted and unique.
  std::vector<std::vector<std::string>> aliases;
  // Aliases as given in the corpus record (lowercased). When absent the
  // aliases were derived from the name.
  std::optional<std::vector<std::string>> explicit_aliases;

  bool operator==(const TargetSpec &) const = default;
};

// Builds a target. Without explicit aliases, aliases come from
// DeriveAliases. With them, the explicit phrases are used as given plus the
// full canonical name.
inline TargetSpec MakeTarget(
    std::string canonical_name,
    std::optional<std::vector<std::string>> explicit_aliases = std::nullopt) {
  TargetSpec t;
  t.canonical_name = std::move(canonical_name);
  if (!explicit_aliases) {
    t.aliases = DeriveAliases(t.canonical_name);
    return t;
  }
  std::vector<std::string> given;
  for (const auto &a : *explicit_aliases) {
    given.push_back(AsciiLower(a));
    auto forms = PhraseForms(a);
    if (!forms.empty()) t.aliases.push_back(std::move(forms));
  }
  auto full = PhraseForms(t.canonical_name);
  if (!full.empty()) t.aliases.push_back(std::move(full));
  internal::SortUnique(t.aliases);
  t.explicit_aliases = std::move(given);
  return t;
}

inline std::vector<MentionSpan> FindMentions(std::span<const Token> tokens,
                                             const TargetSpec &target) {
  return FindMentions(tokens, std::span<const std::vector<std::string>>(
                                  target.aliases));
}

struct Quote {
  std::string id;
  std::string text;
  std::string source;
  TargetSpec target;
  std::vector<std::string> categories;
  std::optional<Label> gold;

  bool operator==(const Quote &) const = default;
};

namespace internal {

using nlohmann::json;

inline const json &Field(const json &obj, const char *key,
                         const std::string &file, std::size_t line) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw InputError(file, line, std::string("missing field '") + key + "'");
  }
  return *it;
}

inline std::string StringField(const json &obj, const char *key,
                               const std::string &file, std::size_t line) {
  const json &v = Field(obj, key, file, line);
  if (!v.is_string()) {
    throw InputError(file, line, std::string("field '") + key +
                                     "' must be a string");
  }
  return v.get<std::string>();
}

inline std::vector<std::string> StringArray(const json &v, const char *key,
                                            const std::string &file,
                                            std::size_t line) {
  if (!v.is_array()) {
    throw InputError(file, line, std::string("field '") + key +
                                     "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto &item : v) {
    if (!item.is_string()) {
      throw InputError(file, line, std::string("field '") + key +
                                       "' must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

inline Label LabelField(const json &obj, const char *key,
                        const std::string &file, std::size_t line) {
  std::string s = StringField(obj, key, file, line);
  auto label = ParseLabel(s);
  if (!label) {
    throw InputError(file, line, std::string("field '") + key +
                                     "' has unknown label '" + s + "'");
  }
  return *label;
}

// Calls fn(object, line_no) for every non-blank JSON Lines record.
template <typename Fn>
void ForEachJsonLine(std::istream &in, const std::string &file, Fn &&fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ChompCr(line);
    if (Trim(line).empty()) continue;
    json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded()) throw InputError(file, line_no, "invalid JSON");
    if (!obj.is_object()) {
      throw InputError(file, line_no, "record must be a JSON object");
    }
    fn(obj, line_no);
  }
}

}  // namespace internal

// Reads a JSON Lines corpus. Quotes come back in file order.
inline std::vector<Quote> ParseCorpus(std::istream &in,
                                      const std::string &file) {
  using internal::json;
  std::vector<Quote> quotes;
  std::unordered_map<std::string, std::size_t> seen;
  internal::ForEachJsonLine(in, file, [&](const json &obj, std::size_t line) {
    Quote q;
    q.id = internal::StringField(obj, "id", file, line);
    if (q.id.empty()) throw InputError(file, line, "empty id");
    q.text = internal::StringField(obj, "text", file, line);
    if (Trim(q.text).empty()) throw InputError(file, line, "empty text");
    q.source = internal::StringField(obj, "source", file, line);

    const json &target = internal::Field(obj, "target", file, line);
    if (!target.is_object()) {
      throw InputError(file, line, "field 'target' must be an object");
    }
    std::string name = internal::StringField(target, "name", file, line);
    if (PhraseForms(name).empty()) {
      throw InputError(file, line, "target name has no word forms");
    }
    std::optional<std::vector<std::string>> aliases;
    if (auto it = target.find("aliases"); it != target.end()) {
      aliases = internal::StringArray(*it, "aliases", file, line);
    }
    q.target = MakeTarget(std::move(name), std::move(aliases));

    if (auto it = obj.find("categories"); it != obj.end()) {
      q.categories = internal::StringArray(*it, "categories", file, line);
    }
    if (auto it = obj.find("gold"); it != obj.end() && !it->is_null()) {
      q.gold = internal::LabelField(obj, "gold", file, line);
    }

    if (auto [it, fresh] = seen.emplace(q.id, line); !fresh) {
      throw InputError(file, line, "duplicate id '" + q.id +
                                       "' (first seen on line " +
                                       std::to_string(it->second) + ")");
    }
    quotes.push_back(std::move(q));
  });
  return quotes;
}

inline std::vector<Quote> LoadCorpus(const std::string &path) {
  auto in = OpenInput(path);
  return ParseCorpus(in, path);
}

inline nlohmann::ordered_json QuoteToJson(const Quote &q) {
  nlohmann::ordered_json obj;
  obj["id"] = q.id;
  obj["text"] = q.text;
  obj["source"] = q.source;
  nlohmann::ordered_json target;
  target["name"] = q.target.canonical_name;
  if (q.target.explicit_aliases) target["aliases"] = *q.target.explicit_aliases;
  obj["target"] = std::move(target);
  obj["categories"] = q.categories;
  if (q.gold) obj["gold"] = std::string(LabelName(*q.gold));
  return obj;
}

inline void WriteCorpus(std::ostream &out, std::span<const Quote> quotes) {
  for (const auto &q : quotes) out << QuoteToJson(q).dump() << '\n';
}

struct AnnotationRecord {
  std::string quote_id;
  Label a = Label::kObjective;
  Label b = Label::kObjective;
};

// One annotator pair and the quotes it labelled, in file order.
struct AnnotatorPair {
  std::string id;
  std::vector<AnnotationRecord> records;
};

struct AnnotationSet {
  std::vector<AnnotatorPair> pairs;  // in order of first appearance
};

inline AnnotationSet ParseAnnotations(std::istream &in,
                                      const std::string &file) {
  using internal::json;
  AnnotationSet set;
  std::map<std::string, std::size_t> pair_index;
  std::set<std::pair<std::string, std::string>> seen;
  internal::ForEachJsonLine(in, file, [&](const json &obj, std::size_t line) {
    std::string pair = internal::StringField(obj, "pair", file, line);
    AnnotationRecord r;
    r.quote_id = internal::StringField(obj, "quote_id", file, line);
    r.a = internal::LabelField(obj, "a", file, line);
    r.b = internal::LabelField(obj, "b", file, line);
    if (!seen.emplace(pair, r.quote_id).second) {
      throw InputError(file, line, "quote '" + r.quote_id +
                                       "' annotated twice by pair '" + pair +
                                       "'");
    }
    auto [it, fresh] = pair_index.emplace(pair, set.pairs.size());
    if (fresh) set.pairs.push_back({pair, {}});
    set.pairs[it->second].records.push_back(std::move(r));
  });
  return set;
}

inline AnnotationSet LoadAnnotations(const std::string &path) {
  auto in = OpenInput(path);
  return ParseAnnotations(in, path);
}

// How per-class agreement is normalized: by the quotes the first annotator
// put in the class, or by the quotes either annotator put there.
enum class DenominatorMode { kFirstAnnotator, kEitherAnnotator };

inline std::optional<DenominatorMode> ParseDenominatorMode(std::string_view s) {
  if (s == "first" || s == "first-annotator") {
    return DenominatorMode::kFirstAnnotator;
  }
  if (s == "either" || s == "either-annotator") {
    return DenominatorMode::kEitherAnnotator;
  }
  return std::nullopt;
}

struct PairAgreement {
  std::string pair;
  std::size_t total = 0;
  std::size_t agreed = 0;
  double agreement = 0.0;
};

struct AgreementReport {
  DenominatorMode mode = DenominatorMode::kFirstAnnotator;
  std::size_t total_quotes = 0;
  std::size_t agreed_quotes = 0;
  std::array<std::size_t, 3> agreed_per_class{};     // indexed by LabelIndex
  std::array<std::size_t, 3> class_denominators{};   // per `mode`
  std::array<double, 3> per_class_agreement{};
  double overall_agreement = 0.0;  // pooled over all pairs
  double macro_agreement = 0.0;    // mean of per-pair agreement
  std::vector<PairAgreement> pairs;
};

namespace internal {

inline void ValidateAnnotations(std::span<const Quote> corpus,
                                const AnnotationSet &annotations) {
  std::set<std::string_view> ids;
  for (const auto &q : corpus) ids.insert(q.id);
  std::map<std::string_view, std::string_view> owner;
  for (const auto &p : annotations.pairs) {
    for (const auto &r : p.records) {
      if (!ids.count(r.quote_id)) {
        throw InputError("annotation for unknown quote id '" + r.quote_id +
                         "' (pair '" + p.id + "')");
      }
      auto [it, fresh] = owner.emplace(r.quote_id, p.id);
      if (!fresh) {
        throw InputError("quote '" + r.quote_id + "' appears in pairs '" +
                         std::string(it->second) + "' and '" + p.id + "'");
      }
    }
  }
}

inline double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace internal

// Raw percentage agreement. A quote is agreed when both annotators of its
// pair chose the same label. Counts are pooled across pairs.
inline AgreementReport ComputeAgreement(
    std::span<const Quote> corpus, const AnnotationSet &annotations,
    DenominatorMode mode = DenominatorMode::kFirstAnnotator) {
  internal::ValidateAnnotations(corpus, annotations);
  AgreementReport report;
  report.mode = mode;
  double macro_sum = 0.0;
  for (const auto &p : annotations.pairs) {
    PairAgreement pa{p.id, p.records.size(), 0, 0.0};
    for (const auto &r : p.records) {
      bool agreed = r.a == r.b;
      pa.agreed += agreed;
      if (agreed) ++report.agreed_per_class[LabelIndex(r.a)];
      ++report.class_denominators[LabelIndex(r.a)];
      if (mode == DenominatorMode::kEitherAnnotator && !agreed) {
        ++report.class_denominators[LabelIndex(r.b)];
      }
    }
    pa.agreement = internal::Ratio(pa.agreed, pa.total);
    macro_sum += pa.agreement;
    report.total_quotes += pa.total;
    report.agreed_quotes += pa.agreed;
    report.pairs.push_back(std::move(pa));
  }
  report.overall_agreement =
      internal::Ratio(report.agreed_quotes, report.total_quotes);
  report.macro_agreement =
      annotations.pairs.empty()
          ? 0.0
          : macro_sum / static_cast<double>(annotations.pairs.size());
  for (std::size_t c = 0; c < 3; ++c) {
    report.per_class_agreement[c] = internal::Ratio(
        report.agreed_per_class[c], report.class_denominators[c]);
  }
  return report;
}

// The quotes both annotators agreed on, in corpus order, with gold set to
// the agreed label.
inline std::vector<Quote> AgreedSubset(std::span<const Quote> corpus,
                                       const AnnotationSet &annotations) {
  internal::ValidateAnnotations(corpus, annotations);
  std::unordered_map<std::string_view, Label> agreed;
  for (const auto &p : annotations.pairs) {
    for (const auto &r : p.records) {
      if (r.a == r.b) agreed.emplace(r.quote_id, r.a);
    }
  }
  std::vector<Quote> out;
  for (const auto &q : corpus) {
    if (auto it = agreed.find(q.id); it != agreed.end()) {
      Quote g = q;
      g.gold = it->second;
      out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace quotesent

#endif  // QUOTESENT_CORPUS_HPP_
