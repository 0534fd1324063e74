// Copyright 2026 The geolaw Authors.
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

#include "geolaw/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "geolaw/cutoff.hpp"
#include "geolaw/error.hpp"
#include "geolaw/fitting.hpp"
#include "geolaw/genmodel.hpp"
#include "geolaw/kernels.hpp"
#include "geolaw/report.hpp"

namespace geolaw::cli {
namespace {

namespace fs = std::filesystem;

struct AnalysisOutput {
  AnalysisReport report;
  std::map<Dimension, BinnedSummary> bins;
  bool fit_failure = false;
};

Json config_echo(const AnalyzeArgs& args) {
  Json dims = Json::array();
  for (Dimension d : args.dims) dims.push_back(dimension_name(d));
  Json families = Json::array();
  for (Family f : args.families) families.push_back(family_name(f));
  return {{"inputs", args.inputs},
          {"format", args.format},
          {"dims", dims},
          {"unit", args.unit == UnitMode::character ? "char" : "token"},
          {"families", families},
          {"cutoff", args.cutoff},
          {"types", args.types},
          {"strict", args.strict},
          {"doc_separator", args.doc_separator},
          {"fold_case", args.fold_case},
          {"free_amplitude", args.free_amplitude},
          {"cutoff_n", args.n_total ? "total" : "distinct"},
          {"per_file", args.per_file}};
}

void attach_cutoff(ViewReport& view, const AnalyzeArgs& args) {
  const FitReport* gamma = nullptr;
  for (const auto& f : view.fits) {
    if (f.family == Family::gamma_type && f.report) gamma = &*f.report;
  }
  if (!gamma) {
    view.cutoff_warning = "no gamma-type fit available for cutoff estimation";
    return;
  }
  const auto& params = std::get<GammaTypeParams>(gamma->params);
  const auto observed = view.series.raws();
  CutoffOptions options;
  if (args.n_total) options.n_objects = static_cast<double>(view.series.n_observations);
  try {
    if (view.series.view == View::FreqLength) {
      CutoffEstimate est;
      est.o_m = *std::min_element(observed.begin(), observed.end());
      est.oo_M = *std::max_element(observed.begin(), observed.end());
      est.n_objects = options.n_objects.value_or(static_cast<double>(observed.size()));
      view.cutoff_method = "fl_max";
      try {
        est.o_M = fl_special_cutoff(params, est.oo_M);
        est.converged = true;
      } catch (const NoMaximumError& e) {
        est.o_M = est.oo_M;
        view.cutoff_warning = std::string(e.what()) + "; using the observed maximum";
      }
      view.cutoff = est;
    } else {
      view.cutoff_method = "fixed_point";
      view.cutoff = estimate_cutoff(observed, params, options);
    }
  } catch (const Error& e) {
    view.cutoff.reset();
    view.cutoff_warning = e.what();
  }
}

AnalysisOutput analyze_corpus(const Corpus& corpus, const AnalyzeArgs& args) {
  AnalysisOutput out;
  out.report.config = config_echo(args);
  const StatsOptions stats{args.fold_case};
  out.report.corpus.n_documents = corpus.documents.size();
  out.report.corpus.n_entities = corpus.n_entities();
  out.report.corpus.n_distinct_entities = entity_counts(corpus, stats).size();

  for (Dimension dim : args.dims) {
    switch (dim) {
      case Dimension::quantity:
        out.report.views.push_back({quantity_series(corpus, stats), {}, {}, {}, {}});
        break;
      case Dimension::length: {
        auto t = length_series(corpus);
        for (auto* s : {&t.freq_rank, &t.freq_value, &t.value_rank}) {
          out.report.views.push_back({std::move(*s), {}, {}, {}, {}});
        }
        break;
      }
      case Dimension::distance: {
        auto t = distance_series(corpus);
        for (auto* s : {&t.freq_rank, &t.freq_value, &t.value_rank}) {
          out.report.views.push_back({std::move(*s), {}, {}, {}, {}});
        }
        break;
      }
    }
    out.bins[dim] = binned_summary(corpus, dim, stats);
  }

  FitOptions fit_options;
  fit_options.free_amplitude = args.free_amplitude;
  auto& views = out.report.views;
  const auto n_views = static_cast<std::int64_t>(views.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n_views; ++i) {
    ViewReport& view = views[static_cast<std::size_t>(i)];
    view.fits = compare_families(view.series, args.families, fit_options);
    if (args.cutoff) attach_cutoff(view, args);
  }
  if (!args.families.empty()) {
    for (const auto& view : views) {
      bool any = false;
      for (const auto& f : view.fits) any = any || f.ok();
      out.fit_failure = out.fit_failure || !any;
    }
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << content;
}

void write_outputs(const fs::path& dir, const AnalysisOutput& output,
                   const std::vector<std::pair<std::string, const AnalysisOutput*>>& bin_rows) {
  fs::create_directories(dir);
  write_file(dir / "report.json", dump_json(to_json(output.report)));
  for (const auto& view : output.report.views) {
    const std::string name(view_name(view.series.view));
    std::ostringstream series, plot;
    write_series_csv(series, view.series);
    write_plot_csv(plot, view);
    write_file(dir / (name + ".csv"), series.str());
    write_file(dir / (name + "_plot.csv"), plot.str());
  }
  for (const auto& [dim, summary] : output.bins) {
    std::vector<BinRow> rows;
    for (const auto& [label, part] : bin_rows) {
      const auto it = part->bins.find(dim);
      if (it != part->bins.end()) rows.push_back({label, it->second});
    }
    std::ostringstream csv;
    write_bins_csv(csv, rows);
    write_file(dir / ("bins_" + std::string(dimension_name(dim)) + ".csv"), csv.str());
  }
}

Corpus parse_file(const std::string& path, const AnalyzeArgs& args) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  Corpus corpus;
  if (args.format == "jsonl") {
    corpus = parse_jsonl_spans(in, JsonlOptions{args.types});
  } else {
    corpus = parse_conll(in, ConllOptions{args.types, args.strict, args.doc_separator});
  }
  corpus.unit_mode = args.unit;
  return corpus;
}

}  // namespace

int cmd_analyze(const AnalyzeArgs& args, std::ostream& err) {
  if (args.inputs.empty()) {
    err << "analyze: no input files\n";
    return kInputError;
  }
  if (args.format != "conll" && args.format != "jsonl") {
    err << "analyze: unknown format '" << args.format << "'\n";
    return kInputError;
  }
  for (const auto& path : args.inputs) {
    if (!fs::is_regular_file(path)) {
      err << path << ": cannot open input\n";
      return kInputError;
    }
  }

  std::vector<Corpus> parts;
  for (const auto& path : args.inputs) {
    try {
      parts.push_back(parse_file(path, args));
    } catch (const ParseError& e) {
      err << path << ": " << e.what() << '\n';
      return kInputError;
    } catch (const Error& e) {
      err << path << ": " << e.what() << '\n';
      return kInputError;
    }
  }

  try {
    std::vector<AnalysisOutput> per_file;
    if (args.per_file) {
      for (const auto& part : parts) per_file.push_back(analyze_corpus(part, args));
    }
    Corpus merged = merge(parts);
    merged.unit_mode = args.unit;
    const AnalysisOutput output = analyze_corpus(merged, args);

    std::vector<std::pair<std::string, const AnalysisOutput*>> rows{{"all", &output}};
    for (std::size_t i = 0; i < per_file.size(); ++i) {
      rows.emplace_back(fs::path(args.inputs[i]).stem().string(), &per_file[i]);
    }
    const fs::path out_dir(args.out);
    write_outputs(out_dir, output, rows);
    bool fit_failure = output.fit_failure;
    for (std::size_t i = 0; i < per_file.size(); ++i) {
      const std::string sub = std::to_string(i) + "_" + fs::path(args.inputs[i]).stem().string();
      write_outputs(out_dir / sub, per_file[i], {{rows[i + 1].first, &per_file[i]}});
      fit_failure = fit_failure || per_file[i].fit_failure;
    }
    if (fit_failure) {
      err << "analyze: every requested family failed for at least one view\n";
      return kFitFailure;
    }
    return kOk;
  } catch (const EmptySeriesError& e) {
    err << "analyze: " << e.what() << '\n';
    return kEmptyDimension;
  } catch (const Error& e) {
    err << "analyze: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_simulate(const SimulateArgs& args, std::ostream& err) {
  const PlacementConfig config{args.p, args.tokens, args.k, args.seed};
  try {
    config.validate();
  } catch (const Error& e) {
    err << "simulate: " << e.what() << '\n';
    return kInputError;
  }
  const GapSample sample = simulate_gaps(config);
  const auto counts = kernels::omp::histogram(sample.gaps);
  const Moments moments = gap_moments(sample.gaps);

  Json verdict = {
      {"config", {{"p", args.p}, {"tokens", args.tokens}, {"k", args.k}, {"seed", args.seed}}},
      {"generator", "splitmix64-counter"},
      {"n_gaps", sample.gaps.size()},
      {"n_successes", sample.n_successes},
      {"mean", number_to_json(moments.mean)},
      {"variance", number_to_json(moments.variance)},
      {"theory_mean", number_to_json(static_cast<double>(args.k) * (1.0 - args.p) / args.p)},
      {"theory_variance",
       number_to_json(static_cast<double>(args.k) * (1.0 - args.p) / (args.p * args.p))},
      {"beta_theory", number_to_json(args.p == 1.0 ? std::numeric_limits<double>::infinity()
                                                   : -std::log1p(-args.p))},
      {"beta_poisson", number_to_json(args.p)},
      {"kl_vs_geometric", nullptr},
      {"fitted_rate", nullptr},
  };
  try {
    const GapCheck check = gap_distribution_check(sample, args.p);
    verdict["kl_vs_geometric"] = number_to_json(check.kl_vs_geometric);
    if (check.fitted_rate) verdict["fitted_rate"] = number_to_json(*check.fitted_rate);
  } catch (const Error& e) {
    verdict["check_error"] = e.what();
  }

  std::ostringstream csv;
  csv << "gap,count\n";
  for (std::size_t t = 0; t < counts.size(); ++t) {
    if (counts[t] > 0) csv << t << ',' << counts[t] << '\n';
  }
  try {
    fs::create_directories(args.out);
    write_file(fs::path(args.out) / "gaps.csv", csv.str());
    write_file(fs::path(args.out) / "verdict.json", dump_json(verdict));
  } catch (const std::exception& e) {
    err << "simulate: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

int cmd_fit(const FitArgs& args, std::ostream& out, std::ostream& err) {
  std::vector<Family> families;
  if (args.family == "all") {
    families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  } else if (auto f = family_from_name(args.family)) {
    families.push_back(*f);
  } else {
    err << "fit: unknown family '" << args.family << "'\n";
    return kInputError;
  }
  std::ifstream in(args.series, std::ios::binary);
  if (!in) {
    err << args.series << ": cannot open series\n";
    return kInputError;
  }
  XYTable table;
  try {
    table = read_xy_csv(in);
  } catch (const ParseError& e) {
    err << args.series << ": " << e.what() << '\n';
    return kInputError;
  }
  if (table.x.size() < 4) {
    err << "fit: need at least 4 rows, got " << table.x.size() << '\n';
    return kEmptyDimension;
  }
  FitOptions options;
  options.free_amplitude = args.free_amplitude;
  const auto outcomes = compare_families(table.x, table.y, families, options);
  bool any = false;
  for (const auto& o : outcomes) any = any || o.ok();
  if (args.family == "all") {
    Json arr = Json::array();
    for (const auto& o : outcomes) arr.push_back(to_json(o));
    out << dump_json(arr);
  } else {
    out << dump_json(to_json(outcomes.front()));
  }
  if (!any) {
    err << "fit: " << outcomes.front().error << '\n';
    return kFitFailure;
  }
  return kOk;
}

int run(int argc, char** argv) {
  if (const char* env = std::getenv("GEOLAW_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Entity quantity, length and distance laws of annotated corpora"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  std::string dims = "quantity,length,distance";
  std::string unit = "char";
  std::string families = "gamma,zipf,gauss";
  std::string types;
  auto* a = app.add_subcommand("analyze", "Extract entity statistics and fit curve families");
  a->add_option("inputs", analyze.inputs, "Annotated corpus files")->required();
  a->add_option("--format", analyze.format, "conll or jsonl")->check(CLI::IsMember({"conll", "jsonl"}));
  a->add_option("--dims", dims, "Comma-separated subset of quantity,length,distance");
  a->add_option("--unit", unit, "Distance unit: char or token")->check(CLI::IsMember({"char", "token"}));
  a->add_option("--families", families, "Comma-separated subset of gamma,zipf,gauss");
  a->add_flag("--cutoff", analyze.cutoff, "Estimate upper cutoffs");
  a->add_option("--out", analyze.out, "Output directory");
  a->add_option("--types", types, "Comma-separated entity types to keep (default: all)");
  a->add_flag("--strict", analyze.strict, "Reject stray I- tags instead of repairing them");
  a->add_option("--doc-separator", analyze.doc_separator, "CoNLL document marker line");
  a->add_flag("--fold-case", analyze.fold_case, "Merge entity surfaces that differ in case");
  a->add_flag("--free-amplitude", analyze.free_amplitude, "Fit a free gaussian amplitude");
  a->add_flag("--cutoff-n-total", analyze.n_total, "Cutoff N counts all observations");
  a->add_flag("--per-file", analyze.per_file, "Also write one report per input file");

  SimulateArgs simulate;
  auto* s = app.add_subcommand("simulate", "Simulate Bernoulli entity placement");
  s->add_option("--p", simulate.p, "Placement probability in (0, 1]")->required();
  s->add_option("--tokens", simulate.tokens, "Token stream length");
  s->add_option("--k", simulate.k, "Successes per waiting time");
  s->add_option("--seed", simulate.seed, "Generator seed");
  s->add_option("--out", simulate.out, "Output directory");

  FitArgs fit;
  auto* f = app.add_subcommand("fit", "Fit curve families to an x,y CSV series");
  f->add_option("--series", fit.series, "CSV with x and y columns")->required();
  f->add_option("--family", fit.family, "gamma, zipf, gauss or all");
  f->add_flag("--free-amplitude", fit.free_amplitude, "Fit a free gaussian amplitude");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const auto split = [](const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
    return out;
  };

  if (a->parsed()) {
    analyze.dims.clear();
    for (const auto& d : split(dims)) {
      const auto dim = dimension_from_name(d);
      if (!dim) {
        std::cerr << "analyze: unknown dimension '" << d << "'\n";
        return kInputError;
      }
      analyze.dims.push_back(*dim);
    }
    analyze.families.clear();
    for (const auto& name : split(families)) {
      const auto fam = family_from_name(name);
      if (!fam) {
        std::cerr << "analyze: unknown family '" << name << "'\n";
        return kInputError;
      }
      analyze.families.push_back(*fam);
    }
    for (const auto& t : split(types)) analyze.types.insert(t);
    analyze.unit = unit == "token" ? UnitMode::token : UnitMode::character;
    return cmd_analyze(analyze, std::cerr);
  }
  if (s->parsed()) return cmd_simulate(simulate, std::cerr);
  return cmd_fit(fit, std::cout, std::cerr);
}

}  // namespace geolaw::cli
