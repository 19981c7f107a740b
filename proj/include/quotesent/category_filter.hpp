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

// Subject-domain category definitions and the alert-word test used to keep
// good/bad news vocabulary out of target sentiment scores.

#ifndef QUOTESENT_CATEGORY_FILTER_HPP_
#define QUOTESENT_CATEGORY_FILTER_HPP_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "quotesent/base.hpp"

namespace quotesent {

enum class FilterMode { kTaggedOnly, kGlobal };

inline std::optional<FilterMode> ParseFilterMode(std::string_view s) {
  if (s == "tagged" || s == "tagged-only") return FilterMode::kTaggedOnly;
  if (s == "global") return FilterMode::kGlobal;
  return std::nullopt;
}

constexpr std::string_view FilterModeName(FilterMode m) {
  return m == FilterMode::kGlobal ? "global" : "tagged";
}

// Category id -> lowercase words and phrases that define the category.
// Only list membership is modelled; weights and Boolean expressions of the
// original category definitions play no part in filtering.
class CategoryDefs {
 public:
  using Forms = std::set<std::string, std::less<>>;

  // Returns false if the category already exists.
  bool AddCategory(std::string id, const std::set<std::string> &forms) {
    auto [it, fresh] = categories_.try_emplace(std::move(id));
    if (!fresh) return false;
    for (const auto &f : forms) {
      std::string n = NormalizePhrase(f);
      if (n.empty()) continue;
      it->second.insert(n);
      all_forms_.insert(n);
    }
    return true;
  }

  const Forms *Find(std::string_view id) const {
    auto it = categories_.find(id);
    return it == categories_.end() ? nullptr : &it->second;
  }

  bool InAnyCategory(std::string_view form) const {
    return all_forms_.count(form) > 0;
  }

  bool empty() const { return categories_.empty(); }
  std::size_t size() const { return categories_.size(); }
  const std::map<std::string, Forms, std::less<>> &categories() const {
    return categories_;
  }

 private:
  std::map<std::string, Forms, std::less<>> categories_;
  Forms all_forms_;
};

// Parses `category_id: form1, form2, ...` lines. Forms may be phrases;
// `#` starts a comment line. A category may appear only once.
inline CategoryDefs ParseCategories(std::istream &in, const std::string &file) {
  CategoryDefs defs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ChompCr(line);
    std::string_view body = Trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos) {
      throw InputError(file, line_no, "expected 'category_id: form, ...'");
    }
    std::string id(Trim(body.substr(0, colon)));
    if (id.empty()) throw InputError(file, line_no, "empty category id");
    std::set<std::string> forms;
    std::string_view rest = Trim(body.substr(colon + 1));
    if (!rest.empty()) {
      for (auto part : Split(rest, ',')) {
        std::string form = NormalizePhrase(part);
        if (form.empty()) {
          throw InputError(file, line_no, "empty form in category '" + id + "'");
        }
        forms.insert(std::move(form));
      }
    }
    if (!defs.AddCategory(id, forms)) {
      throw InputError(file, line_no, "category '" + id + "' defined twice");
    }
  }
  return defs;
}

inline CategoryDefs LoadCategories(const std::string &path) {
  auto in = OpenInput(path);
  return ParseCategories(in, path);
}

// True when `form` (lowercase, single-spaced) belongs to the definition of
// one of the quote's categories (tagged-only) or of any category (global).
// Category ids the definitions do not know contribute nothing.
inline bool IsCategoryWord(std::string_view form,
                           std::span<const std::string> quote_categories,
                           const CategoryDefs &defs, FilterMode mode) {
  if (mode == FilterMode::kGlobal) return defs.InAnyCategory(form);
  for (const auto &id : quote_categories) {
    const auto *forms = defs.Find(id);
    if (forms && forms->count(form)) return true;
  }
  return false;
}

}  // namespace quotesent

#endif  // QUOTESENT_CATEGORY_FILTER_HPP_
