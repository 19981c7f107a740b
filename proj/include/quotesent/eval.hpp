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

// Accuracy evaluation against gold labels, the majority baseline, and the
// window x alert-filter x lexicon experiment grid with its reports.

#ifndef QUOTESENT_EVAL_HPP_
#define QUOTESENT_EVAL_HPP_

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quotesent/base.hpp"
#include "quotesent/category_filter.hpp"
#include "quotesent/corpus.hpp"
#include "quotesent/lexicon.hpp"
#include "quotesent/scorer.hpp"
#include "quotesent/textproc.hpp"

namespace quotesent {

// Scores every quote; slot i of the result belongs to corpus[i] whatever
// the number of jobs.
inline std::vector<ScoreBreakdown> ScoreCorpus(std::span<const Quote> corpus,
                                               const Lexicon &lexicon,
                                               const CategoryDefs &defs,
                                               const ScoreConfig &config,
                                               std::size_t jobs = 1) {
  std::vector<ScoreBreakdown> out(corpus.size());
  ParallelFor(corpus.size(), jobs, [&](std::size_t i) {
    out[i] = ScoreQuote(corpus[i], lexicon, defs, config);
  });
  return out;
}

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
};

struct EvalResult {
  std::string lexicon_name;
  ScoreConfig config;
  std::size_t total_quotes = 0;
  std::size_t covered_quotes = 0;  // target found
  std::size_t correct = 0;
  double accuracy = 0.0;        // correct / covered
  double accuracy_total = 0.0;  // correct / total
  double coverage = 0.0;        // covered / total
  // confusion[gold][predicted], both indexed by LabelIndex.
  std::array<std::array<std::size_t, 3>, 3> confusion{};
  std::array<ClassMetrics, 3> per_class{};
};

// Classifies each gold-labelled quote. Quotes whose target is not found are
// left out of the confusion matrix and of the accuracy denominator; they
// only lower coverage.
inline EvalResult Evaluate(std::span<const Quote> corpus,
                           const Lexicon &lexicon, const CategoryDefs &defs,
                           const ScoreConfig &config, std::size_t jobs = 1) {
  for (const auto &q : corpus) {
    if (!q.gold) throw InputError("quote '" + q.id + "' has no gold label");
  }
  EvalResult r;
  r.lexicon_name = lexicon.name();
  r.config = config;
  r.total_quotes = corpus.size();
  auto breakdowns = ScoreCorpus(corpus, lexicon, defs, config, jobs);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    auto predicted = AsLabel(Classify(breakdowns[i], config.tau));
    if (!predicted) continue;
    ++r.covered_quotes;
    ++r.confusion[LabelIndex(*corpus[i].gold)][LabelIndex(*predicted)];
  }
  for (std::size_t c = 0; c < 3; ++c) r.correct += r.confusion[c][c];
  r.accuracy = internal::Ratio(r.correct, r.covered_quotes);
  r.accuracy_total = internal::Ratio(r.correct, r.total_quotes);
  r.coverage = internal::Ratio(r.covered_quotes, r.total_quotes);
  for (std::size_t c = 0; c < 3; ++c) {
    std::size_t predicted = 0, gold = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      predicted += r.confusion[k][c];
      gold += r.confusion[c][k];
    }
    r.per_class[c] = {internal::Ratio(r.confusion[c][c], predicted),
                      internal::Ratio(r.confusion[c][c], gold)};
  }
  return r;
}

struct Baseline {
  Label label = Label::kObjective;
  std::size_t count = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
};

// Most frequent gold class and its share of the corpus. Ties go to
// objective, then negative, then positive.
inline Baseline MajorityBaseline(std::span<const Quote> corpus) {
  if (corpus.empty()) throw InputError("majority baseline of an empty corpus");
  std::array<std::size_t, 3> counts{};
  for (const auto &q : corpus) {
    if (!q.gold) throw InputError("quote '" + q.id + "' has no gold label");
    ++counts[LabelIndex(*q.gold)];
  }
  Baseline b;
  b.total = corpus.size();
  b.label = Label::kObjective;
  b.count = counts[LabelIndex(Label::kObjective)];
  for (Label l : {Label::kNegative, Label::kPositive}) {
    if (counts[LabelIndex(l)] > b.count) {
      b.label = l;
      b.count = counts[LabelIndex(l)];
    }
  }
  b.accuracy = internal::Ratio(b.count, b.total);
  return b;
}

struct LexiconConfig {
  std::string name;  // column label
  Lexicon lexicon;
};

struct GridRow {
  WindowSpec window = WindowSpec::WholeText();
  bool alerts = true;

  bool operator==(const GridRow &) const = default;
};

struct EvalGrid {
  std::vector<std::string> columns;
  std::vector<GridRow> rows;
  // cells[row][column]; empty when the cell was not run.
  std::vector<std::vector<std::optional<EvalResult>>> cells;
};

inline std::vector<WindowSpec> DefaultWindows() {
  return {WindowSpec::WholeText(), WindowSpec::Words(3), WindowSpec::Words(6),
          WindowSpec::Words(10)};
}

// Rows in report order: whole text first then ascending window size, the
// alert-filtered row before the unfiltered one.
inline std::vector<GridRow> GridRows(std::span<const WindowSpec> windows,
                                     const std::vector<bool> &alert_modes) {
  std::vector<WindowSpec> ws(windows.begin(), windows.end());
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  bool with_on = std::find(alert_modes.begin(), alert_modes.end(), true) !=
                 alert_modes.end();
  bool with_off = std::find(alert_modes.begin(), alert_modes.end(), false) !=
                  alert_modes.end();
  std::vector<GridRow> rows;
  for (const auto &w : ws) {
    if (with_on) rows.push_back({w, true});
    if (with_off) rows.push_back({w, false});
  }
  return rows;
}

// Evaluates every (window, alert mode, lexicon) combination. Cells are
// independent and may run concurrently; values do not depend on `jobs`.
inline EvalGrid RunGrid(std::span<const Quote> corpus,
                        std::span<const LexiconConfig> lexicons,
                        std::span<const WindowSpec> windows,
                        const std::vector<bool> &alert_modes,
                        const CategoryDefs &defs, int tau = 0,
                        FilterMode filter_mode = FilterMode::kTaggedOnly,
                        std::size_t jobs = 1) {
  if (lexicons.empty() || windows.empty() || alert_modes.empty()) {
    throw InputError("grid needs at least one lexicon, window and alert mode");
  }
  EvalGrid grid;
  for (const auto &l : lexicons) grid.columns.push_back(l.name);
  grid.rows = GridRows(windows, alert_modes);
  grid.cells.assign(grid.rows.size(),
                    std::vector<std::optional<EvalResult>>(lexicons.size()));
  const std::size_t ncols = lexicons.size();
  ParallelFor(grid.rows.size() * ncols, jobs, [&](std::size_t cell) {
    const GridRow &row = grid.rows[cell / ncols];
    const LexiconConfig &lc = lexicons[cell % ncols];
    ScoreConfig config{row.window, row.alerts, filter_mode, tau};
    EvalResult r = Evaluate(corpus, lc.lexicon, defs, config);
    r.lexicon_name = lc.name;
    grid.cells[cell / ncols][cell % ncols] = std::move(r);
  });
  return grid;
}

enum class ReportFormat { kTable, kCsv };

inline std::optional<ReportFormat> ParseReportFormat(std::string_view s) {
  if (s == "table") return ReportFormat::kTable;
  if (s == "csv") return ReportFormat::kCsv;
  return std::nullopt;
}

struct RenderOptions {
  bool full_precision = false;   // 6 decimals instead of 2
  bool total_denominator = false;  // correct/total instead of correct/covered
};

namespace internal {

inline std::string FormatRatio(double v, bool full_precision) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), full_precision ? "%.6f" : "%.2f", v);
  return buf;
}

inline std::string PadRight(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// Renders rows of cells as space-aligned columns with two spaces between
// columns and no trailing whitespace.
inline std::string AlignColumns(const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> widths;
  for (const auto &r : rows) {
    if (widths.size() < r.size()) widths.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      widths[i] = std::max(widths[i], CodepointCount(r[i]));
    }
  }
  std::string out;
  for (const auto &r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i > 0) line += "  ";
      line += r[i];
      if (i + 1 < r.size()) {
        line.append(widths[i] - CodepointCount(r[i]), ' ');
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

inline std::string CellValue(const std::optional<EvalResult> &cell,
                             const RenderOptions &opts) {
  if (!cell) return "n/a";
  return FormatRatio(opts.total_denominator ? cell->accuracy_total
                                            : cell->accuracy,
                     opts.full_precision);
}

}  // namespace internal

// CSV: `window,alerts,<lexicon names...>` then one row per grid row.
// Table: Word window / Alerts / one column per lexicon, the window label
// printed only on the first of its rows.
inline std::string RenderGrid(const EvalGrid &grid, ReportFormat format,
                              const RenderOptions &opts = {}) {
  if (format == ReportFormat::kCsv) {
    std::string out = "window,alerts";
    for (const auto &c : grid.columns) out += "," + c;
    out += '\n';
    for (std::size_t r = 0; r < grid.rows.size(); ++r) {
      out += grid.rows[r].window.ToString();
      out += grid.rows[r].alerts ? ",on" : ",off";
      for (const auto &cell : grid.cells[r]) {
        out += "," + internal::CellValue(cell, opts);
      }
      out += '\n';
    }
    return out;
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Word window", "Alerts"};
  header.insert(header.end(), grid.columns.begin(), grid.columns.end());
  rows.push_back(std::move(header));
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    const GridRow &row = grid.rows[r];
    bool first = r == 0 || !(grid.rows[r - 1].window == row.window);
    std::vector<std::string> line{
        first ? (row.window.whole_text() ? "Whole text" : row.window.ToString())
              : "",
        row.alerts ? "filtered" : "unfiltered"};
    for (const auto &cell : grid.cells[r]) {
      line.push_back(internal::CellValue(cell, opts));
    }
    rows.push_back(std::move(line));
  }
  return internal::AlignColumns(rows);
}

inline std::string RenderResult(const EvalResult &r, ReportFormat format,
                                const RenderOptions &opts = {}) {
  auto ratio = [&](double v) {
    return internal::FormatRatio(v, opts.full_precision);
  };
  const std::string alerts = r.config.alerts_filter ? "on" : "off";
  if (format == ReportFormat::kCsv) {
    std::string out =
        "lexicon,window,alerts,filter_mode,tau,total,covered,correct,"
        "accuracy,accuracy_total,coverage\n";
    out += r.lexicon_name + "," + r.config.window.ToString() + "," + alerts +
           "," + std::string(FilterModeName(r.config.filter_mode)) + "," +
           std::to_string(r.config.tau) + "," + std::to_string(r.total_quotes) +
           "," + std::to_string(r.covered_quotes) + "," +
           std::to_string(r.correct) + "," + ratio(r.accuracy) + "," +
           ratio(r.accuracy_total) + "," + ratio(r.coverage) + "\n";
    return out;
  }
  std::vector<std::vector<std::string>> head{
      {"lexicon", r.lexicon_name},
      {"window", r.config.window.ToString()},
      {"alert filter",
       alerts + " (" + std::string(FilterModeName(r.config.filter_mode)) + ")"},
      {"tau", std::to_string(r.config.tau)},
      {"quotes", std::to_string(r.total_quotes)},
      {"covered", std::to_string(r.covered_quotes) + " (" + ratio(r.coverage) +
                      ")"},
      {"correct", std::to_string(r.correct)},
      {"accuracy", ratio(r.accuracy)},
      {"accuracy over all quotes", ratio(r.accuracy_total)}};
  std::string out = internal::AlignColumns(head);
  out += "\nconfusion (rows: gold, columns: predicted)\n";
  std::vector<std::vector<std::string>> table{
      {"", "positive", "negative", "objective", "precision", "recall"}};
  for (Label g : kAllLabels) {
    std::vector<std::string> line{std::string(LabelName(g))};
    for (Label p : kAllLabels) {
      line.push_back(std::to_string(r.confusion[LabelIndex(g)][LabelIndex(p)]));
    }
    line.push_back(ratio(r.per_class[LabelIndex(g)].precision));
    line.push_back(ratio(r.per_class[LabelIndex(g)].recall));
    table.push_back(std::move(line));
  }
  out += internal::AlignColumns(table);
  return out;
}

}  // namespace quotesent

#endif  // QUOTESENT_EVAL_HPP_
