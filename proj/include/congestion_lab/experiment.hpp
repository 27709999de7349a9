// experiment.hpp — declarative experiment sweeps: generate, optionally
// remetrize, compute loads and bounds, and emit CSV/JSON/SVG artifacts.
//
// Config grammar: flat "key = value" lines, '#' starts a comment.
//   name       experiment label
//   family     regular_tree | hpq | sphere_wired | grid | tree_cross_z |
//              bridged_grids | random_regular
//   k p q dim side r size    fixed generator parameters (per family)
//   sweep      swept values, space separated, strictly increasing
//              (radius for tree/hpq/sphere_wired/tree_cross_z, side for
//              grid/bridged_grids, size for random_regular)
//   weighted   route on edge lengths (default: true iff a scheme is set)
//   scheme     none | uniform | bounded_random | sphere_geometric |
//              sphere_calibrated, with c / lo / hi / beta / scheme_seed
//   seed       base seed for randomized families
//   replicates per sweep value; must be 1 for deterministic families
//   delta      also compute four-point delta (bool), delta_cap size limit
//   budget     skip rows whose N*E exceeds this (default 1e10)
//   workers    row-level worker pool width (default 1)
//   ref_slopes reference slopes drawn on the plot
//   csv json svg   output paths (csv required; others optional)
#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "congestion_lab/analysis.hpp"
#include "congestion_lab/csv.hpp"
#include "congestion_lab/generators.hpp"
#include "congestion_lab/load.hpp"
#include "congestion_lab/parallel.hpp"
#include "congestion_lab/remetrize.hpp"
#include "congestion_lab/rng.hpp"
#include "congestion_lab/svg.hpp"

namespace conlab {

struct ExperimentConfig {
  std::string name = "experiment";
  GeneratorSpec base;
  std::vector<int> sweep;
  bool weighted = false;
  std::optional<WeightScheme> scheme;
  int replicates = 1;
  bool compute_delta = false;
  int delta_cap = 400;
  double budget = 1e10;
  int workers = 1;
  std::vector<double> ref_slopes;
  std::string csv_path, json_path, svg_path;
};

inline bool family_is_randomized(Family f) {
  return f == Family::sphere_wired || f == Family::random_regular;
}

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

inline bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("config: bad boolean for " + key + ": " + v);
}

}  // namespace detail

inline ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected 'key = value': " + line);
    kv[detail::trim(line.substr(0, eq))] = detail::trim(line.substr(eq + 1));
  }
  auto take = [&](const char* key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  if (auto v = take("name")) cfg.name = *v;
  if (auto v = take("family"))
    cfg.base.family = family_from_name(*v);
  else
    throw std::invalid_argument("config: family is required");
  if (auto v = take("k")) cfg.base.k = std::stoi(*v);
  if (auto v = take("p")) cfg.base.p = std::stoi(*v);
  if (auto v = take("q")) cfg.base.q = std::stoi(*v);
  if (auto v = take("dim")) cfg.base.q_dim = std::stoi(*v);
  if (auto v = take("side")) cfg.base.side = std::stoi(*v);
  if (auto v = take("r")) cfg.base.r = std::stoi(*v);
  if (auto v = take("size")) cfg.base.size = std::stoi(*v);
  if (auto v = take("seed")) cfg.base.seed = std::stoull(*v);
  if (auto v = take("sweep")) {
    std::istringstream ss(*v);
    for (std::string tok; ss >> tok;) {
      if (!tok.empty() && tok.back() == ',') tok.pop_back();
      cfg.sweep.push_back(std::stoi(tok));
    }
  }
  if (cfg.sweep.empty()) throw std::invalid_argument("config: sweep is required");
  for (size_t i = 1; i < cfg.sweep.size(); ++i)
    if (cfg.sweep[i] <= cfg.sweep[i - 1])
      throw std::invalid_argument("config: sweep values must be strictly increasing");

  std::string scheme_name = "none";
  if (auto v = take("scheme")) scheme_name = *v;
  double c = 1.0, lo = 0.5, hi = 2.0, beta = 0.5;
  uint64_t scheme_seed = cfg.base.seed;
  if (auto v = take("c")) c = std::stod(*v);
  if (auto v = take("lo")) lo = std::stod(*v);
  if (auto v = take("hi")) hi = std::stod(*v);
  if (auto v = take("beta")) beta = std::stod(*v);
  if (auto v = take("scheme_seed")) scheme_seed = std::stoull(*v);
  if (scheme_name == "none") {
  } else if (scheme_name == "uniform") {
    cfg.scheme = WeightScheme::uniform(c);
  } else if (scheme_name == "bounded_random") {
    cfg.scheme = WeightScheme::bounded_random(lo, hi, scheme_seed);
  } else if (scheme_name == "sphere_geometric") {
    cfg.scheme = WeightScheme::sphere_geometric(beta);
  } else if (scheme_name == "sphere_calibrated") {
    cfg.scheme = WeightScheme::sphere_calibrated(c);
  } else {
    throw std::invalid_argument("config: unknown scheme " + scheme_name);
  }
  cfg.weighted = cfg.scheme.has_value();
  if (auto v = take("weighted")) cfg.weighted = detail::parse_bool(*v, "weighted");
  if (auto v = take("replicates")) cfg.replicates = std::stoi(*v);
  if (cfg.replicates < 1) throw std::invalid_argument("config: replicates must be >= 1");
  if (!family_is_randomized(cfg.base.family) && cfg.replicates != 1)
    throw std::invalid_argument("config: replicates must be 1 for deterministic families");
  if (auto v = take("delta")) cfg.compute_delta = detail::parse_bool(*v, "delta");
  if (auto v = take("delta_cap")) cfg.delta_cap = std::stoi(*v);
  if (auto v = take("budget")) cfg.budget = std::stod(*v);
  if (auto v = take("workers")) cfg.workers = std::stoi(*v);
  if (auto v = take("ref_slopes")) {
    std::istringstream ss(*v);
    for (double x; ss >> x;) cfg.ref_slopes.push_back(x);
  }
  if (auto v = take("csv")) cfg.csv_path = *v;
  if (auto v = take("json")) cfg.json_path = *v;
  if (auto v = take("svg")) cfg.svg_path = *v;
  if (cfg.csv_path.empty()) throw std::invalid_argument("config: csv output path is required");
  if (!kv.empty()) throw std::invalid_argument("config: unknown key " + kv.begin()->first);
  return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

struct ResultRow {
  std::string family;
  std::string params;
  int sweep_value = 0;
  int replicate = 0;
  int N = 0;
  int64_t edges = 0;
  double diameter = std::nan("");
  double max_load = std::nan("");
  int argmax_layer = -1;
  double theorem1_bound = std::nan("");
  double lemma_bound = std::nan("");
  double wedge_bound = std::nan("");
  double delta = std::nan("");
  int violations = 0;
  std::string note;
  double wall_ms = 0.0;
};

inline const char* kResultHeader =
    "family,params,sweep,replicate,N,edges,diameter,max_load,argmax_layer,"
    "theorem1_bound,lemma_bound,wedge_bound,delta,violations,note";

inline std::string csv_row(const ResultRow& r) {
  auto opt = [](double x) { return std::isnan(x) ? std::string{} : fmt_g9(x); };
  std::ostringstream s;
  s << r.family << ',' << r.params << ',' << r.sweep_value << ',' << r.replicate << ',' << r.N
    << ',' << r.edges << ',' << opt(r.diameter) << ',' << opt(r.max_load) << ','
    << (r.argmax_layer < 0 ? std::string{} : std::to_string(r.argmax_layer)) << ','
    << opt(r.theorem1_bound) << ',' << opt(r.lemma_bound) << ',' << opt(r.wedge_bound) << ','
    << opt(r.delta) << ',' << r.violations << ',' << r.note;
  return s.str();
}

namespace detail {

inline std::string params_string(const ExperimentConfig& cfg) {
  std::ostringstream s;
  switch (cfg.base.family) {
    case Family::regular_tree:
    case Family::sphere_wired: s << "k=" << cfg.base.k; break;
    case Family::hpq: s << "p=" << cfg.base.p << ";q=" << cfg.base.q; break;
    case Family::grid: s << "dim=" << cfg.base.q_dim; break;
    case Family::tree_cross_z: break;
    case Family::bridged_grids: break;
    case Family::random_regular: s << "r=" << cfg.base.r; break;
  }
  if (cfg.scheme) {
    if (s.tellp() > 0) s << ';';
    s << "scheme=" << cfg.scheme->name();
    switch (cfg.scheme->kind) {
      case WeightScheme::Kind::uniform:
      case WeightScheme::Kind::sphere_calibrated: s << ";c=" << fmt_g9(cfg.scheme->c); break;
      case WeightScheme::Kind::bounded_random:
        s << ";lo=" << fmt_g9(cfg.scheme->lo) << ";hi=" << fmt_g9(cfg.scheme->hi);
        break;
      case WeightScheme::Kind::sphere_geometric: s << ";beta=" << fmt_g9(cfg.scheme->beta); break;
    }
  }
  return s.str();
}

inline GeneratorSpec spec_for(const ExperimentConfig& cfg, int value, int replicate) {
  GeneratorSpec s = cfg.base;
  switch (s.family) {
    case Family::regular_tree:
    case Family::hpq:
    case Family::sphere_wired:
    case Family::tree_cross_z: s.radius = value; break;
    case Family::grid:
    case Family::bridged_grids: s.side = value; break;
    case Family::random_regular: s.size = value; break;
  }
  if (family_is_randomized(s.family))
    s.seed = sub_seed(sub_seed(cfg.base.seed, static_cast<uint64_t>(value)),
                      static_cast<uint64_t>(replicate));
  return s;
}

inline ResultRow run_row(const ExperimentConfig& cfg, int value, int replicate) {
  auto t0 = std::chrono::steady_clock::now();
  ResultRow row;
  row.family = family_name(cfg.base.family);
  row.params = params_string(cfg);
  row.sweep_value = value;
  row.replicate = replicate;
  Graph g = generate(spec_for(cfg, value, replicate));
  row.N = g.node_count();
  row.edges = g.edge_count();
  const double cost = static_cast<double>(g.node_count()) * static_cast<double>(g.edge_count());
  if (cost > cfg.budget) {
    row.note = "skipped: budget exceeded";
    return row;
  }
  if (!is_connected(g)) {
    row.note = "skipped: disconnected";
    return row;
  }
  if (cfg.scheme) g = apply_weights(g, *cfg.scheme);

  auto ld = conlab::detail::geodesic_load_with_diameter(g, cfg.weighted);
  row.diameter = ld.diameter;
  row.max_load = ld.profile.max_load;
  if (g.has_layers()) row.argmax_layer = g.layer(ld.profile.argmax);

  const bool unit_lengths = !cfg.weighted;
  int radius = 0;
  if (g.has_layers()) radius = *std::max_element(g.layers().begin(), g.layers().end());
  if (radius >= 1) row.theorem1_bound = theorem1_bound(row.N, radius);
  if (unit_lengths) {
    auto ds = degree_stats(g);
    row.lemma_bound = lemma_upper_bound(ds.max_degree, row.diameter);
    if (row.max_load > row.lemma_bound) ++row.violations;
    if (g.has_rotation() && !std::isnan(row.theorem1_bound) &&
        row.max_load < row.theorem1_bound)
      ++row.violations;
  }
  if (g.has_rotation() && g.root()) {
    auto cert = wedge_cut(g, *g.root());
    row.wedge_bound = cert.bound;
  }
  if (cfg.compute_delta && row.N <= cfg.delta_cap)
    row.delta = delta_hyperbolicity(g, cfg.weighted, cfg.delta_cap);
  auto t1 = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return row;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// per sweep value: (N, median max_load) over replicates with data
inline std::vector<std::pair<double, double>> median_points(const std::vector<ResultRow>& rows) {
  std::map<int, std::pair<double, std::vector<double>>> groups;
  for (const auto& r : rows) {
    if (std::isnan(r.max_load)) continue;
    auto& g = groups[r.sweep_value];
    g.first = r.N;
    g.second.push_back(r.max_load);
  }
  std::vector<std::pair<double, double>> pts;
  for (auto& [value, g] : groups) pts.push_back({g.first, median(g.second)});
  return pts;
}

}  // namespace detail

// Executes the sweep. Rows run in a worker pool of cfg.workers (each row's
// load computation follows the load-engine parallel contract); output order
// is fixed by sweep order regardless of completion order. With a single
// worker rows are appended to the CSV as they finish.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  std::vector<std::pair<int, int>> tasks;  // (sweep value, replicate)
  for (int value : cfg.sweep)
    for (int rep = 0; rep < cfg.replicates; ++rep) tasks.push_back({value, rep});
  std::vector<ResultRow> rows(tasks.size());

  std::ofstream csv(cfg.csv_path, std::ios::trunc);
  if (!csv) throw std::runtime_error("experiment: cannot open " + cfg.csv_path);
  csv << kResultHeader << "\n";
  if (cfg.workers <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) {
      rows[i] = detail::run_row(cfg, tasks[i].first, tasks[i].second);
      csv << csv_row(rows[i]) << "\n";
      csv.flush();
    }
  } else {
    for_each_chunk(static_cast<int64_t>(tasks.size()), 1, cfg.workers,
                   [&](int64_t c, int64_t, int64_t) {
                     auto [value, rep] = tasks[static_cast<size_t>(c)];
                     rows[static_cast<size_t>(c)] = detail::run_row(cfg, value, rep);
                   });
    for (const auto& r : rows) csv << csv_row(r) << "\n";
  }
  csv.close();

  auto pts = detail::median_points(rows);
  std::optional<ScalingFit> fit;
  if (pts.size() >= 2) fit = fit_scaling(pts);

  if (!cfg.json_path.empty()) {
    nlohmann::ordered_json j;
    j["name"] = cfg.name;
    j["family"] = family_name(cfg.base.family);
    j["params"] = detail::params_string(cfg);
    j["weighted"] = cfg.weighted;
    j["seed"] = cfg.base.seed;
    j["replicates"] = cfg.replicates;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json o;
      o["sweep"] = r.sweep_value;
      o["replicate"] = r.replicate;
      o["N"] = r.N;
      o["edges"] = r.edges;
      if (!std::isnan(r.diameter)) o["diameter"] = r.diameter;
      if (!std::isnan(r.max_load)) o["max_load"] = r.max_load;
      if (r.argmax_layer >= 0) o["argmax_layer"] = r.argmax_layer;
      if (!std::isnan(r.theorem1_bound)) o["theorem1_bound"] = r.theorem1_bound;
      if (!std::isnan(r.lemma_bound)) o["lemma_bound"] = r.lemma_bound;
      if (!std::isnan(r.wedge_bound)) o["wedge_bound"] = r.wedge_bound;
      if (!std::isnan(r.delta)) o["delta"] = r.delta;
      o["violations"] = r.violations;
      if (!r.note.empty()) o["note"] = r.note;
      o["wall_ms"] = r.wall_ms;  // timing lives here, never in the CSV
      arr.push_back(std::move(o));
    }
    j["rows"] = std::move(arr);
    if (fit) {
      j["fit"] = {{"slope", fit->slope},
                  {"intercept", fit->intercept},
                  {"r_squared", fit->r_squared},
                  {"slope_stderr", fit->slope_stderr},
                  {"points_used", fit->points_used}};
    }
    std::ofstream out(cfg.json_path, std::ios::trunc);
    if (!out) throw std::runtime_error("experiment: cannot open " + cfg.json_path);
    out << j.dump(2) << "\n";
  }
  if (!cfg.svg_path.empty()) {
    std::string svg = render_loglog_svg(pts, fit, cfg.ref_slopes, cfg.name);
    std::ofstream out(cfg.svg_path, std::ios::trunc | std::ios::binary);
    if (!out) throw std::runtime_error("experiment: cannot open " + cfg.svg_path);
    out << svg;
  }
  return rows;
}

// Fits a power law to two CSV columns, aggregating replicates by median.
inline ScalingFit fit_from_csv(const std::string& csv_path, const std::string& xcol,
                               const std::string& ycol) {
  CsvTable t = read_csv(csv_path);
  int xi = t.column(xcol), yi = t.column(ycol);
  std::map<double, std::vector<double>> groups;
  for (const auto& row : t.rows) {
    const std::string& xs = row[static_cast<size_t>(xi)];
    const std::string& ys = row[static_cast<size_t>(yi)];
    if (xs.empty() || ys.empty()) continue;
    groups[std::stod(xs)].push_back(std::stod(ys));
  }
  std::vector<std::pair<double, double>> pts;
  for (auto& [x, vals] : groups) pts.push_back({x, detail::median(vals)});
  if (pts.size() < 2) throw std::runtime_error("fit_from_csv: need at least 2 distinct x values");
  return fit_scaling(pts);
}

// Log-log scatter of (N, max_load) with fit line and reference slopes.
inline void emit_plot(const std::string& csv_path, const std::string& svg_path,
                      std::span<const double> overlays) {
  CsvTable t = read_csv(csv_path);
  int xi = t.column("N"), yi = t.column("max_load");
  std::map<double, std::vector<double>> groups;
  for (const auto& row : t.rows) {
    const std::string& xs = row[static_cast<size_t>(xi)];
    const std::string& ys = row[static_cast<size_t>(yi)];
    if (xs.empty() || ys.empty()) continue;
    groups[std::stod(xs)].push_back(std::stod(ys));
  }
  std::vector<std::pair<double, double>> pts;
  for (auto& [x, vals] : groups) pts.push_back({x, detail::median(vals)});
  if (pts.empty()) throw std::runtime_error("emit_plot: no data points in " + csv_path);
  std::optional<ScalingFit> fit;
  if (pts.size() >= 2) fit = fit_scaling(pts);
  std::string svg = render_loglog_svg(pts, fit, overlays, "max load vs N");
  std::ofstream out(svg_path, std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("emit_plot: cannot open " + svg_path);
  out << svg;
}

}  // namespace conlab
