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

// quotesent: command-line front end for target-centred quote sentiment
// classification, evaluation grids and annotation agreement.
//
// Exit codes: 0 success, 1 internal error, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quotesent/quotesent.hpp"

namespace quotesent {
namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;

// Scoring flags shared by classify, evaluate and grid.
struct ScoringFlags {
  std::string corpus;
  std::string annotations;
  std::vector<std::string> lexicons;
  std::string merge = "priority-first";
  std::string categories;
  std::string filter_mode = "tagged";
  int tau = 0;
  std::size_t jobs = 1;
};

void AddScoringFlags(CLI::App *cmd, ScoringFlags &f) {
  cmd->add_option("--corpus", f.corpus, "Quote corpus (JSON Lines)")
      ->required();
  cmd->add_option("--lexicon", f.lexicons,
                  "Four-class lexicon file (repeatable)")
      ->required();
  cmd->add_option("--merge", f.merge,
                  "How to combine several lexicons: priority-first|additive")
      ->check(CLI::IsMember({"priority-first", "additive"}));
  cmd->add_option("--categories", f.categories, "Category definition file");
  cmd->add_option("--filter-mode", f.filter_mode,
                  "Alert-word scope: tagged|global")
      ->check(CLI::IsMember({"tagged", "global"}));
  cmd->add_option("--tau", f.tau, "Neutral band: |total| <= tau is objective")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", f.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
}

WindowSpec ParseWindowOrThrow(const std::string &s) {
  auto w = WindowSpec::Parse(s);
  if (!w) throw InputError("bad window '" + s + "' (use whole or N >= 1)");
  return *w;
}

bool ParseAlertsOrThrow(const std::string &s) {
  if (s == "on") return true;
  if (s == "off") return false;
  throw InputError("bad alert mode '" + s + "' (use on or off)");
}

std::vector<Quote> LoadScoringCorpus(const ScoringFlags &f) {
  auto corpus = LoadCorpus(f.corpus);
  if (!f.annotations.empty()) {
    corpus = AgreedSubset(corpus, LoadAnnotations(f.annotations));
  }
  return corpus;
}

CategoryDefs LoadDefs(const ScoringFlags &f) {
  return f.categories.empty() ? CategoryDefs{} : LoadCategories(f.categories);
}

Lexicon LoadCombined(const ScoringFlags &f) {
  std::vector<Lexicon> lexicons;
  for (const auto &path : f.lexicons) lexicons.push_back(LoadLexicon(path));
  if (lexicons.size() == 1) return std::move(lexicons.front());
  return Merge(lexicons, *ParseStrategy(f.merge));
}

int RunClassify(const ScoringFlags &f, const std::string &window,
                const std::string &alerts, bool explain) {
  ScoreConfig config{ParseWindowOrThrow(window), ParseAlertsOrThrow(alerts),
                     *ParseFilterMode(f.filter_mode), f.tau};
  auto corpus = LoadScoringCorpus(f);
  auto lexicon = LoadCombined(f);
  auto defs = LoadDefs(f);
  auto breakdowns = ScoreCorpus(corpus, lexicon, defs, config, f.jobs);
  std::string out;
  for (const auto &b : breakdowns) {
    nlohmann::ordered_json rec;
    rec["id"] = b.quote_id;
    rec["label"] = std::string(ClassificationName(Classify(b, config.tau)));
    rec["total"] = b.total;
    if (explain) rec["explain"] = BreakdownToJson(b);
    out += rec.dump() + "\n";
  }
  std::cout << out;
  return 0;
}

int RunEvaluate(const ScoringFlags &f, const std::string &window,
                const std::string &alerts, const std::string &format,
                const RenderOptions &opts) {
  ScoreConfig config{ParseWindowOrThrow(window), ParseAlertsOrThrow(alerts),
                     *ParseFilterMode(f.filter_mode), f.tau};
  auto corpus = LoadScoringCorpus(f);
  auto lexicon = LoadCombined(f);
  auto defs = LoadDefs(f);
  auto result = Evaluate(corpus, lexicon, defs, config, f.jobs);
  std::cout << RenderResult(result, *ParseReportFormat(format), opts);
  return 0;
}

int RunGridCommand(const ScoringFlags &f,
                   const std::vector<std::string> &combine,
                   const std::vector<std::string> &window_args,
                   const std::vector<std::string> &alert_args,
                   const std::string &format, const RenderOptions &opts) {
  std::vector<WindowSpec> windows;
  for (const auto &w : window_args) windows.push_back(ParseWindowOrThrow(w));
  std::vector<bool> alert_modes;
  for (const auto &a : alert_args) alert_modes.push_back(ParseAlertsOrThrow(a));

  auto corpus = LoadScoringCorpus(f);
  auto defs = LoadDefs(f);
  std::vector<LexiconConfig> columns;
  std::map<std::string, std::size_t> by_name;
  for (const auto &path : f.lexicons) {
    Lexicon l = LoadLexicon(path);
    if (!by_name.emplace(l.name(), columns.size()).second) {
      throw InputError("two lexicons named '" + l.name() + "'");
    }
    std::string name = l.name();
    columns.push_back({name, std::move(l)});
  }
  auto strategy = *ParseStrategy(f.merge);
  for (const auto &spec : combine) {
    std::vector<Lexicon> parts;
    for (auto part : Split(spec, '+')) {
      auto it = by_name.find(std::string(part));
      if (it == by_name.end()) {
        throw InputError("--combine '" + spec + "' names unknown lexicon '" +
                         std::string(part) + "'");
      }
      parts.push_back(columns[it->second].lexicon);
    }
    columns.push_back({spec, Merge(parts, strategy)});
  }
  auto grid = RunGrid(corpus, columns, windows, alert_modes, defs, f.tau,
                      *ParseFilterMode(f.filter_mode), f.jobs);
  std::cout << RenderGrid(grid, *ParseReportFormat(format), opts);
  return 0;
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.0f%%", v * 100.0);
  return buf;
}

std::string Fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

int RunAgreement(const std::string &corpus_path,
                 const std::string &annotations_path, const std::string &mode,
                 const std::string &format) {
  auto corpus = LoadCorpus(corpus_path);
  auto annotations = LoadAnnotations(annotations_path);
  auto denominator = *ParseDenominatorMode(mode);
  auto report = ComputeAgreement(corpus, annotations, denominator);
  auto agreed = AgreedSubset(corpus, annotations);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"quotes", std::to_string(report.total_quotes)});
  rows.push_back({"agreed", std::to_string(report.agreed_quotes)});
  rows.push_back({"agreement", Percent(report.overall_agreement),
                  Fixed(report.overall_agreement, 4)});
  rows.push_back({"macro agreement", Percent(report.macro_agreement),
                  Fixed(report.macro_agreement, 4)});
  for (Label l : {Label::kNegative, Label::kPositive, Label::kObjective}) {
    std::size_t c = LabelIndex(l);
    rows.push_back({"agreed " + std::string(LabelName(l)),
                    std::to_string(report.agreed_per_class[c]),
                    Percent(report.per_class_agreement[c]),
                    "of " + std::to_string(report.class_denominators[c])});
  }
  for (const auto &p : report.pairs) {
    rows.push_back({"pair " + p.pair,
                    std::to_string(p.agreed) + "/" + std::to_string(p.total),
                    Percent(p.agreement), Fixed(p.agreement, 4)});
  }
  if (!agreed.empty()) {
    auto b = MajorityBaseline(agreed);
    rows.push_back({"majority baseline", std::string(LabelName(b.label)),
                    Fixed(b.accuracy, 4),
                    std::to_string(b.count) + "/" + std::to_string(b.total)});
  }
  rows.push_back({"denominator mode",
                  denominator == DenominatorMode::kFirstAnnotator
                      ? "first-annotator"
                      : "either-annotator"});

  if (*ParseReportFormat(format) == ReportFormat::kCsv) {
    std::string out = "metric,value,detail,extra\n";
    for (const auto &r : rows) {
      std::vector<std::string> cells = r;
      cells.resize(4);
      out += Join(cells, ",") + "\n";
    }
    std::cout << out;
  } else {
    std::cout << internal::AlignColumns(rows);
  }
  return 0;
}

int RunLexiconConvert(const std::string &input, double threshold,
                      const std::string &name) {
  auto graded = LoadGraded(input);
  auto report = ConvertGraded(graded, threshold, name);
  for (const auto &d : report.dropped) {
    std::cerr << "dropped (positivity == negativity): " << d << '\n';
  }
  std::cerr << "converted " << report.lexicon.size() << " entries, dropped "
            << report.dropped.size() << '\n';
  std::ostringstream out;
  WriteLexicon(out, report.lexicon);
  std::cout << out.str();
  return 0;
}

int RunLexiconMerge(const std::vector<std::string> &inputs,
                    const std::string &strategy) {
  std::vector<Lexicon> lexicons;
  for (const auto &p : inputs) lexicons.push_back(LoadLexicon(p));
  auto merged = Merge(lexicons, *ParseStrategy(strategy));
  std::cerr << "merged " << merged.name() << ": " << merged.size()
            << " entries\n";
  std::ostringstream out;
  WriteLexicon(out, merged);
  std::cout << out.str();
  return 0;
}

int RunLexiconInspect(const std::string &input) {
  auto lexicon = LoadLexicon(input);
  std::size_t multiword = 0;
  for (const auto &[key, e] : lexicon.entries()) multiword += e.surface.size() > 1;
  std::vector<std::vector<std::string>> rows{
      {"name", lexicon.name()},
      {"entries", std::to_string(lexicon.size())},
      {"multiword", std::to_string(multiword)},
      {"longest", std::to_string(lexicon.max_words())}};
  for (PolarityClass c : kAllPolarityClasses) {
    rows.push_back({std::string(ClassName(c)),
                    std::to_string(lexicon.CountClass(c))});
  }
  std::cout << internal::AlignColumns(rows);
  return 0;
}

int Main(int argc, char **argv) {
  CLI::App app{"Target-centred lexicon sentiment classification of news "
               "quotations"};
  app.require_subcommand(1);

  ScoringFlags classify_flags;
  std::string classify_window = "6", classify_alerts = "on";
  bool explain = false;
  auto *classify = app.add_subcommand("classify", "Label every quote");
  AddScoringFlags(classify, classify_flags);
  classify->add_option("--annotations", classify_flags.annotations,
                       "Restrict to quotes both annotators agreed on");
  classify->add_option("--window", classify_window, "whole or N words");
  classify->add_option("--alerts", classify_alerts,
                       "Drop category words from scores: on|off");
  classify->add_flag("--explain", explain, "Attach the scoring trace");

  ScoringFlags eval_flags;
  std::string eval_window = "6", eval_alerts = "on", eval_format = "table";
  RenderOptions eval_opts;
  auto *evaluate = app.add_subcommand("evaluate", "Accuracy against gold labels");
  AddScoringFlags(evaluate, eval_flags);
  evaluate->add_option("--annotations", eval_flags.annotations,
                       "Take gold labels from agreed annotations");
  evaluate->add_option("--window", eval_window, "whole or N words");
  evaluate->add_option("--alerts", eval_alerts, "on|off");
  evaluate->add_option("--format", eval_format, "table|csv")
      ->check(CLI::IsMember({"table", "csv"}));
  evaluate->add_flag("--full-precision", eval_opts.full_precision,
                     "Print 6 decimals");
  std::string eval_denominator = "covered";
  evaluate->add_option("--denominator", eval_denominator, "covered|total")
      ->check(CLI::IsMember({"covered", "total"}));

  ScoringFlags grid_flags;
  std::vector<std::string> combine;
  std::vector<std::string> grid_windows{"whole", "3", "6", "10"};
  std::vector<std::string> grid_alerts{"on", "off"};
  std::string grid_format = "table", grid_denominator = "covered";
  RenderOptions grid_opts;
  auto *grid = app.add_subcommand(
      "grid", "Accuracy over windows x alert filtering x lexicons");
  AddScoringFlags(grid, grid_flags);
  grid->add_option("--annotations", grid_flags.annotations,
                   "Take gold labels from agreed annotations");
  grid->add_option("--combine", combine,
                   "Extra column merging loaded lexicons, e.g. a+b")
      ->delimiter(',');
  grid->add_option("--windows", grid_windows, "Comma-separated windows")
      ->delimiter(',');
  grid->add_option("--alerts", grid_alerts, "Comma-separated on/off")
      ->delimiter(',');
  grid->add_option("--format", grid_format, "table|csv")
      ->check(CLI::IsMember({"table", "csv"}));
  grid->add_flag("--full-precision", grid_opts.full_precision,
                 "Print 6 decimals");
  grid->add_option("--denominator", grid_denominator, "covered|total")
      ->check(CLI::IsMember({"covered", "total"}));

  std::string agr_corpus, agr_annotations, agr_mode = "first",
                                           agr_format = "table";
  auto *agreement =
      app.add_subcommand("agreement", "Inter-annotator agreement statistics");
  agreement->add_option("--corpus", agr_corpus, "Quote corpus")->required();
  agreement->add_option("--annotations", agr_annotations, "Annotation file")
      ->required();
  agreement->add_option("--denominator-mode", agr_mode,
                        "Per-class denominator: first|either")
      ->check(CLI::IsMember({"first", "either"}));
  agreement->add_option("--format", agr_format, "table|csv")
      ->check(CLI::IsMember({"table", "csv"}));

  auto *lexicon = app.add_subcommand("lexicon", "Lexicon utilities");
  lexicon->require_subcommand(1);
  std::string convert_input, convert_name = "graded";
  double threshold = 0.5;
  auto *convert = lexicon->add_subcommand(
      "convert", "Graded (surface, positivity, negativity) to four classes");
  convert->add_option("input", convert_input, "Graded lexicon file")
      ->required();
  convert->add_option("--threshold", threshold,
                      "Minimum dominant value for HIGH_* classes");
  convert->add_option("--name", convert_name, "Source id for the entries");
  std::vector<std::string> merge_inputs;
  std::string merge_strategy = "priority-first";
  auto *merge = lexicon->add_subcommand("merge", "Combine lexicons");
  merge->add_option("inputs", merge_inputs, "Lexicon files, highest priority first")
      ->required();
  merge->add_option("--strategy", merge_strategy, "priority-first|additive")
      ->check(CLI::IsMember({"priority-first", "additive"}));
  std::string inspect_input;
  auto *inspect = lexicon->add_subcommand("inspect", "Summarize a lexicon");
  inspect->add_option("input", inspect_input, "Lexicon file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*classify) {
      return RunClassify(classify_flags, classify_window, classify_alerts,
                         explain);
    }
    if (*evaluate) {
      eval_opts.total_denominator = eval_denominator == "total";
      return RunEvaluate(eval_flags, eval_window, eval_alerts, eval_format,
                         eval_opts);
    }
    if (*grid) {
      grid_opts.total_denominator = grid_denominator == "total";
      return RunGridCommand(grid_flags, combine, grid_windows, grid_alerts,
                            grid_format, grid_opts);
    }
    if (*agreement) {
      return RunAgreement(agr_corpus, agr_annotations, agr_mode, agr_format);
    }
    if (*convert) return RunLexiconConvert(convert_input, threshold, convert_name);
    if (*merge) return RunLexiconMerge(merge_inputs, merge_strategy);
    if (*inspect) return RunLexiconInspect(inspect_input);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace
}  // namespace quotesent

int main(int argc, char **argv) { return quotesent::Main(argc, argv); }
