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

#include "geolaw/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "geolaw/error.hpp"

namespace geolaw {

Json number_to_json(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return value;
}

double number_from_json(const Json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw Error("expected a number in report JSON");
}

namespace {

Json params_to_json(const CurveParams& params) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GammaTypeParams>) {
          return {{"c", number_to_json(p.c)}, {"a", number_to_json(p.a)},
                  {"b", number_to_json(p.b)}, {"alpha", number_to_json(p.shape())},
                  {"beta", number_to_json(p.rate())}};
        } else if constexpr (std::is_same_v<T, ZipfParams>) {
          return {{"c", number_to_json(p.c)}, {"delta", number_to_json(p.delta)}};
        } else {
          return {{"mu", number_to_json(p.mu)}, {"sigma", number_to_json(p.sigma)},
                  {"amplitude", number_to_json(p.amplitude)}};
        }
      },
      params);
}

CurveParams params_from_json(Family family, const Json& j) {
  switch (family) {
    case Family::gamma_type:
      return GammaTypeParams{number_from_json(j.at("c")), number_from_json(j.at("a")),
                             number_from_json(j.at("b"))};
    case Family::zipf:
      return ZipfParams{number_from_json(j.at("c")), number_from_json(j.at("delta"))};
    case Family::gaussian:
      return GaussParams{number_from_json(j.at("mu")), number_from_json(j.at("sigma")),
                         number_from_json(j.at("amplitude"))};
  }
  throw Error("unknown family");
}

Family family_from_json(const Json& j) {
  const auto f = family_from_name(j.get<std::string>());
  if (!f) throw Error("unknown family in report JSON");
  return *f;
}

FitQuality quality_from_json(const Json& j) {
  const auto s = j.get<std::string>();
  for (auto q : {FitQuality::strong, FitQuality::acceptable, FitQuality::poor}) {
    if (quality_name(q) == s) return q;
  }
  throw Error("unknown quality label in report JSON");
}

Json numbers_to_json(const std::vector<double>& values) {
  Json arr = Json::array();
  for (double v : values) arr.push_back(number_to_json(v));
  return arr;
}

std::vector<double> numbers_from_json(const Json& j) {
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number_from_json(v));
  return out;
}

}  // namespace

Json to_json(const FitReport& r) {
  return {
      {"family", family_name(r.family)},
      {"params", params_to_json(r.params)},
      {"metrics",
       {{"r_squared", number_to_json(r.metrics.r_squared)},
        {"kl", number_to_json(r.metrics.kl)},
        {"js", number_to_json(r.metrics.js)},
        {"mape", number_to_json(r.metrics.mape)},
        {"quality", quality_name(r.metrics.quality)}}},
      {"sse", number_to_json(r.sse)},
      {"n_points", r.n_points},
      {"converged", r.converged},
      {"iterations", r.iterations},
      {"divergence_clamp", kDivergenceClamp},
      {"fitted", numbers_to_json(r.fitted)},
  };
}

FitReport fit_report_from_json(const Json& j) {
  FitReport r;
  r.family = family_from_json(j.at("family"));
  r.params = params_from_json(r.family, j.at("params"));
  const Json& m = j.at("metrics");
  r.metrics.r_squared = number_from_json(m.at("r_squared"));
  r.metrics.kl = number_from_json(m.at("kl"));
  r.metrics.js = number_from_json(m.at("js"));
  r.metrics.mape = number_from_json(m.at("mape"));
  r.metrics.quality = quality_from_json(m.at("quality"));
  r.sse = number_from_json(j.at("sse"));
  r.n_points = j.at("n_points").get<std::size_t>();
  r.converged = j.at("converged").get<bool>();
  r.iterations = j.at("iterations").get<int>();
  r.fitted = numbers_from_json(j.at("fitted"));
  return r;
}

Json to_json(const FamilyOutcome& outcome) {
  if (outcome.report) return to_json(*outcome.report);
  return {{"family", family_name(outcome.family)}, {"error", outcome.error}};
}

FamilyOutcome family_outcome_from_json(const Json& j) {
  FamilyOutcome out{family_from_json(j.at("family")), std::nullopt, {}};
  if (j.contains("error")) {
    out.error = j.at("error").get<std::string>();
  } else {
    out.report = fit_report_from_json(j);
  }
  return out;
}

Json to_json(const CutoffEstimate& e) {
  return {{"o_m", number_to_json(e.o_m)},
          {"oo_M", number_to_json(e.oo_M)},
          {"o_M", number_to_json(e.o_M)},
          {"d_e", number_to_json(e.d_e)},
          {"d_e_mean", number_to_json(e.d_e_mean)},
          {"n_objects", number_to_json(e.n_objects)},
          {"iterations", e.iterations},
          {"converged", e.converged}};
}

CutoffEstimate cutoff_from_json(const Json& j) {
  CutoffEstimate e;
  e.o_m = number_from_json(j.at("o_m"));
  e.oo_M = number_from_json(j.at("oo_M"));
  e.o_M = number_from_json(j.at("o_M"));
  e.d_e = number_from_json(j.at("d_e"));
  e.d_e_mean = number_from_json(j.at("d_e_mean"));
  e.n_objects = number_from_json(j.at("n_objects"));
  e.iterations = j.at("iterations").get<int>();
  e.converged = j.at("converged").get<bool>();
  return e;
}

Json to_json(const DistributionSeries& s) {
  Json points = Json::array();
  for (const auto& p : s.points) {
    points.push_back({number_to_json(p.x), number_to_json(p.y), number_to_json(p.raw)});
  }
  const Dimension dim = dimension_of(s.view);
  const bool ranked = s.view == View::LengthRank || s.view == View::DistanceRank ||
                      s.view == View::LengthFreqRank || s.view == View::DistanceFreqRank ||
                      s.view == View::QuantityFreqRank;
  return {{"view", view_name(s.view)},
          {"dimension", dimension_name(dim)},
          {"normalized", s.normalized},
          {"x_offset_applied", s.x_offset_applied},
          {"n_observations", s.n_observations},
          {"rank_order", ranked ? "frequency" : "none"},
          {"columns", {"x", "y", "raw_count"}},
          {"points", points}};
}

DistributionSeries series_from_json(const Json& j) {
  DistributionSeries s;
  const auto view = view_from_name(j.at("view").get<std::string>());
  if (!view) throw Error("unknown view in report JSON");
  s.view = *view;
  s.normalized = j.at("normalized").get<bool>();
  s.x_offset_applied = j.at("x_offset_applied").get<int>();
  s.n_observations = j.at("n_observations").get<std::size_t>();
  for (const auto& p : j.at("points")) {
    s.points.push_back(
        {number_from_json(p.at(0)), number_from_json(p.at(1)), number_from_json(p.at(2))});
  }
  return s;
}

Json to_json(const AnalysisReport& report) {
  Json views = Json::array();
  for (const auto& v : report.views) {
    Json fits = Json::array();
    for (const auto& f : v.fits) fits.push_back(to_json(f));
    Json view = to_json(v.series);
    view["fits"] = fits;
    view["cutoff"] = v.cutoff ? to_json(*v.cutoff) : Json(nullptr);
    if (!v.cutoff_method.empty()) view["cutoff_method"] = v.cutoff_method;
    if (!v.cutoff_warning.empty()) view["cutoff_warning"] = v.cutoff_warning;
    views.push_back(view);
  }
  return {{"tool", {{"name", kToolName}, {"version", report.tool_version}}},
          {"config", report.config},
          {"corpus",
           {{"n_documents", report.corpus.n_documents},
            {"n_entities", report.corpus.n_entities},
            {"n_distinct_entities", report.corpus.n_distinct_entities}}},
          {"views", views}};
}

AnalysisReport analysis_report_from_json(const Json& j) {
  AnalysisReport r;
  r.tool_version = j.at("tool").at("version").get<std::string>();
  r.config = j.at("config");
  const Json& c = j.at("corpus");
  r.corpus.n_documents = c.at("n_documents").get<std::size_t>();
  r.corpus.n_entities = c.at("n_entities").get<std::size_t>();
  r.corpus.n_distinct_entities = c.at("n_distinct_entities").get<std::size_t>();
  for (const auto& v : j.at("views")) {
    ViewReport view;
    view.series = series_from_json(v);
    for (const auto& f : v.at("fits")) view.fits.push_back(family_outcome_from_json(f));
    if (!v.at("cutoff").is_null()) view.cutoff = cutoff_from_json(v.at("cutoff"));
    if (v.contains("cutoff_method")) view.cutoff_method = v.at("cutoff_method").get<std::string>();
    if (v.contains("cutoff_warning")) {
      view.cutoff_warning = v.at("cutoff_warning").get<std::string>();
    }
    r.views.push_back(std::move(view));
  }
  return r;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_series_csv(std::ostream& out, const DistributionSeries& series) {
  out << "x,y,raw_count\n";
  for (const auto& p : series.points) {
    out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(p.raw)
        << '\n';
  }
}

void write_plot_csv(std::ostream& out, const ViewReport& view) {
  out << "x,y_observed";
  std::vector<const FitReport*> fits;
  for (const auto& f : view.fits) {
    if (!f.report) continue;
    out << ",y_fitted_" << family_name(f.family);
    fits.push_back(&*f.report);
  }
  out << '\n';
  for (std::size_t i = 0; i < view.series.points.size(); ++i) {
    out << format_double(view.series.points[i].x) << ','
        << format_double(view.series.points[i].y);
    for (const auto* f : fits) out << ',' << format_double(f->fitted[i]);
    out << '\n';
  }
}

void write_bins_csv(std::ostream& out, const std::vector<BinRow>& rows) {
  if (rows.empty()) return;
  out << "dataset";
  for (const auto& bin : rows.front().summary.bins) out << ',' << bin.label;
  out << '\n';
  for (const auto& row : rows) {
    out << row.dataset;
    for (const auto& bin : row.summary.bins) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", bin.percent);
      out << ',' << buf;
    }
    out << '\n';
  }
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\r')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    cells.push_back(cell);
  }
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_cell(const std::string& cell, std::size_t line) {
  if (cell.empty()) throw ParseError("empty numeric cell", line);
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (end != cell.c_str() + cell.size()) throw ParseError("not a number: '" + cell + "'", line);
  return v;
}

}  // namespace

XYTable read_xy_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) break;
  }
  if (line.empty()) throw ParseError("missing CSV header", lineno);
  const auto header = split_csv_row(line);
  std::optional<std::size_t> xcol, ycol;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "x") xcol = i;
    if (header[i] == "y" || (header[i] == "y_observed" && !ycol)) ycol = i;
  }
  if (!xcol || !ycol) throw ParseError("CSV header needs x and y columns", lineno);

  XYTable table;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_row(line);
    if (cells.size() != header.size()) throw ParseError("wrong number of columns", lineno);
    table.x.push_back(parse_cell(cells[*xcol], lineno));
    table.y.push_back(parse_cell(cells[*ycol], lineno));
  }
  return table;
}

}  // namespace geolaw
