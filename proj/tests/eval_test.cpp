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

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "quotesent/eval.hpp"

namespace quotesent {
namespace {

Lexicon Lex(const std::string &text, const std::string &name = "lex") {
  std::istringstream in(text);
  return ParseLexicon(in, name, name + ".tsv");
}

Quote Gold(std::string id, std::string text, Label gold,
           std::vector<std::string> categories = {}) {
  Quote q;
  q.id = std::move(id);
  q.text = std::move(text);
  q.target = MakeTarget("Ana");
  q.categories = std::move(categories);
  q.gold = gold;
  return q;
}

std::vector<Quote> Labels(std::size_t pos, std::size_t neg, std::size_t obj) {
  std::vector<Quote> out;
  auto add = [&](std::size_t n, Label l) {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(Gold("q" + std::to_string(out.size()), "Ana spoke", l));
    }
  };
  add(pos, Label::kPositive);
  add(neg, Label::kNegative);
  add(obj, Label::kObjective);
  return out;
}

const ScoreConfig kWhole{WindowSpec::WholeText(), false, FilterMode::kTaggedOnly, 0};

TEST(EvaluateTest, AccuracyOverCoveredQuotes) {
  std::vector<Quote> corpus = {Gold("q1", "Ana is good", Label::kPositive),
                               Gold("q2", "Ana is bad", Label::kNegative),
                               Gold("q3", "Ana is good", Label::kNegative),
                               Gold("q4", "Nobody here", Label::kPositive)};
  auto r = Evaluate(corpus, Lex("good\tPOSITIVE\nbad\tNEGATIVE\n"), CategoryDefs(), kWhole);
  EXPECT_EQ(r.total_quotes, 4u);
  EXPECT_EQ(r.covered_quotes, 3u);
  EXPECT_EQ(r.correct, 2u);
  EXPECT_DOUBLE_EQ(r.accuracy, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.coverage, 0.75);
  EXPECT_DOUBLE_EQ(r.accuracy_total, 0.5);
  EXPECT_EQ(r.confusion[LabelIndex(Label::kNegative)][LabelIndex(Label::kPositive)], 1u);
  EXPECT_DOUBLE_EQ(r.per_class[LabelIndex(Label::kPositive)].precision, 0.5);
  EXPECT_DOUBLE_EQ(r.per_class[LabelIndex(Label::kNegative)].recall, 0.5);
}

TEST(EvaluateTest, SingleQuote) {
  std::vector<Quote> corpus = {Gold("q", "Ana is good", Label::kPositive)};
  auto r = Evaluate(corpus, Lex("good\tPOSITIVE\n"), CategoryDefs(), kWhole);
  EXPECT_DOUBLE_EQ(r.accuracy, 1.0);
  EXPECT_DOUBLE_EQ(r.coverage, 1.0);
}

TEST(EvaluateTest, EmptyLexiconPredictsObjective) {
  auto corpus = Labels(3, 2, 5);
  auto r = Evaluate(corpus, Lexicon(), CategoryDefs(), kWhole);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.5);
  EXPECT_DOUBLE_EQ(r.accuracy, MajorityBaseline(corpus).accuracy);
}

TEST(EvaluateTest, RequiresGold) {
  auto corpus = Labels(1, 0, 0);
  corpus[0].gold.reset();
  EXPECT_THROW(Evaluate(corpus, Lexicon(), CategoryDefs(), kWhole), InputError);
}

TEST(EvaluateTest, WideWindowEqualsWholeText) {
  std::vector<Quote> corpus = {
      Gold("a", "good words then Ana and more bad words", Label::kNegative),
      Gold("b", "bad bad Ana good", Label::kNegative),
      Gold("c", "Ana", Label::kObjective)};
  Lexicon lex = Lex("good\tPOSITIVE\nbad\tNEGATIVE\nbad words\tHIGH_NEGATIVE\n");
  auto whole = Evaluate(corpus, lex, CategoryDefs(), kWhole);
  ScoreConfig wide = kWhole;
  wide.window = WindowSpec::Words(50);
  auto w = Evaluate(corpus, lex, CategoryDefs(), wide);
  EXPECT_EQ(whole.confusion, w.confusion);
}

TEST(MajorityBaselineTest, Examples) {
  auto b = MajorityBaseline(Labels(193, 234, 865));
  EXPECT_EQ(b.label, Label::kObjective);
  EXPECT_NEAR(b.accuracy, 0.6695, 5e-5);
  EXPECT_DOUBLE_EQ(MajorityBaseline(Labels(0, 0, 4)).accuracy, 1.0);
  EXPECT_EQ(MajorityBaseline(Labels(5, 1, 1)).label, Label::kPositive);
  EXPECT_THROW(MajorityBaseline(std::vector<Quote>{}), InputError);
}

TEST(MajorityBaselineTest, TieOrder) {
  EXPECT_EQ(MajorityBaseline(Labels(1, 1, 1)).label, Label::kObjective);
  EXPECT_DOUBLE_EQ(MajorityBaseline(Labels(1, 1, 1)).accuracy, 1.0 / 3.0);
  EXPECT_EQ(MajorityBaseline(Labels(1, 2, 2)).label, Label::kObjective);
  EXPECT_EQ(MajorityBaseline(Labels(3, 3, 1)).label, Label::kNegative);
}

std::vector<Quote> GridCorpus() {
  return {Gold("a", "Ana fixed the crisis well", Label::kPositive, {"finance"}),
          Gold("b", "Ana caused the crisis", Label::kNegative, {"finance"}),
          Gold("c", "far far far far good Ana", Label::kObjective),
          Gold("d", "Ana met Bo", Label::kObjective),
          Gold("e", "Nobody", Label::kObjective)};
}

std::vector<LexiconConfig> GridLexicons() {
  return {{"one", Lex("crisis\tNEGATIVE\nwell\tPOSITIVE\n", "one")},
          {"two", Lex("good\tPOSITIVE\ncaused\tNEGATIVE\n", "two")}};
}

CategoryDefs FinanceDefs() {
  CategoryDefs defs;
  defs.AddCategory("finance", {"crisis"});
  return defs;
}

TEST(RunGridTest, Cardinality) {
  auto corpus = GridCorpus();
  auto lexicons = GridLexicons();
  std::vector<WindowSpec> windows{WindowSpec::Words(3), WindowSpec::WholeText()};
  auto grid = RunGrid(corpus, lexicons, windows, {false, true}, FinanceDefs());
  ASSERT_EQ(grid.rows.size(), 4u);
  EXPECT_EQ(grid.rows[0], (GridRow{WindowSpec::WholeText(), true}));
  EXPECT_EQ(grid.rows[1], (GridRow{WindowSpec::WholeText(), false}));
  EXPECT_EQ(grid.rows[2], (GridRow{WindowSpec::Words(3), true}));
  EXPECT_EQ(grid.rows[3], (GridRow{WindowSpec::Words(3), false}));
  EXPECT_EQ(grid.columns, (std::vector<std::string>{"one", "two"}));
  for (const auto &row : grid.cells) {
    ASSERT_EQ(row.size(), 2u);
    for (const auto &cell : row) EXPECT_TRUE(cell.has_value());
  }
  EXPECT_EQ(grid.cells[0][0]->lexicon_name, "one");
  EXPECT_EQ(grid.cells[1][0]->config.alerts_filter, false);
  EXPECT_THROW(RunGrid(corpus, lexicons, windows, {}, FinanceDefs()), InputError);
}

TEST(RunGridTest, MatchesEvaluateAndIsOrderFree) {
  auto corpus = GridCorpus();
  auto lexicons = GridLexicons();
  auto grid = RunGrid(corpus, lexicons, DefaultWindows(), {true, false}, FinanceDefs());
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    for (std::size_t c = 0; c < lexicons.size(); ++c) {
      ScoreConfig config{grid.rows[r].window, grid.rows[r].alerts, FilterMode::kTaggedOnly, 0};
      auto direct = Evaluate(corpus, lexicons[c].lexicon, FinanceDefs(), config);
      EXPECT_EQ(grid.cells[r][c]->confusion, direct.confusion);
    }
  }
  std::vector<LexiconConfig> swapped{lexicons[1], lexicons[0]};
  auto defaults = DefaultWindows();
  std::vector<WindowSpec> reversed(defaults.rbegin(), defaults.rend());
  auto other = RunGrid(corpus, swapped, reversed, {false, true}, FinanceDefs(),
                       0, FilterMode::kTaggedOnly, 3);
  ASSERT_EQ(other.rows, grid.rows);
  for (std::size_t r = 0; r < grid.rows.size(); ++r) {
    EXPECT_EQ(other.cells[r][1]->confusion, grid.cells[r][0]->confusion);
    EXPECT_EQ(other.cells[r][0]->confusion, grid.cells[r][1]->confusion);
  }
}

TEST(RunGridTest, NoCategoriesMakesAlertModesEqual) {
  auto grid = RunGrid(GridCorpus(), GridLexicons(), DefaultWindows(), {true, false},
                      CategoryDefs());
  for (std::size_t r = 0; r < grid.rows.size(); r += 2) {
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_EQ(grid.cells[r][c]->confusion, grid.cells[r + 1][c]->confusion);
    }
  }
}

TEST(RunGridTest, IndependentOfJobs) {
  auto a = RunGrid(GridCorpus(), GridLexicons(), DefaultWindows(), {true, false},
                   FinanceDefs(), 0, FilterMode::kTaggedOnly, 1);
  auto b = RunGrid(GridCorpus(), GridLexicons(), DefaultWindows(), {true, false},
                   FinanceDefs(), 0, FilterMode::kTaggedOnly, 4);
  EXPECT_EQ(RenderGrid(a, ReportFormat::kCsv, {true, false}),
            RenderGrid(b, ReportFormat::kCsv, {true, false}));
}

TEST(RenderGridTest, Csv) {
  std::vector<LexiconConfig> one{GridLexicons()[0]};
  std::vector<WindowSpec> w6{WindowSpec::Words(6)};
  auto grid = RunGrid(GridCorpus(), one, w6, {true}, FinanceDefs());
  std::string csv = RenderGrid(grid, ReportFormat::kCsv);
  // Covered quotes a-d: a +1 filtered crisis -> pos (correct), b filtered
  // -> obj (wrong), c, d obj (correct).
  EXPECT_EQ(csv, "window,alerts,one\n6,on,0.75\n");
  EXPECT_EQ(RenderGrid(grid, ReportFormat::kCsv, {true, false}),
            "window,alerts,one\n6,on,0.750000\n");
  EXPECT_EQ(RenderGrid(grid, ReportFormat::kCsv, {false, true}),
            "window,alerts,one\n6,on,0.60\n");
  EXPECT_EQ(csv, RenderGrid(grid, ReportFormat::kCsv));
}

TEST(RenderGridTest, TableAndMissingCells) {
  auto grid = RunGrid(GridCorpus(), GridLexicons(), DefaultWindows(), {true, false},
                      FinanceDefs());
  grid.cells[3][1].reset();
  std::string table = RenderGrid(grid, ReportFormat::kTable);
  std::istringstream lines(table);
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(header.rfind("Word window  Alerts", 0), 0u) << header;
  EXPECT_EQ(first.rfind("Whole text   filtered", 0), 0u) << first;
  EXPECT_EQ(second.rfind("             unfiltered", 0), 0u) << second;
  EXPECT_NE(table.find("n/a"), std::string::npos);
  EXPECT_NE(RenderGrid(grid, ReportFormat::kCsv).find("3,off,"), std::string::npos);
}

TEST(RenderResultTest, Formats) {
  std::vector<Quote> corpus = {Gold("q", "Ana is good", Label::kPositive)};
  auto r = Evaluate(corpus, Lex("good\tPOSITIVE\n"), CategoryDefs(), kWhole);
  EXPECT_EQ(RenderResult(r, ReportFormat::kCsv),
            "lexicon,window,alerts,filter_mode,tau,total,covered,correct,accuracy,"
            "accuracy_total,coverage\nlex,whole,off,tagged,0,1,1,1,1.00,1.00,1.00\n");
  std::string table = RenderResult(r, ReportFormat::kTable);
  EXPECT_NE(table.find("accuracy"), std::string::npos);
  EXPECT_NE(table.find("confusion"), std::string::npos);
}

}  // namespace
}  // namespace quotesent
