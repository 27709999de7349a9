// congestion_lab — command line front end: generate graphs, compute geodesic
// loads, run analyses and remetrizations, and drive experiment sweeps.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "congestion_lab/analysis.hpp"
#include "congestion_lab/experiment.hpp"
#include "congestion_lab/generators.hpp"
#include "congestion_lab/json_io.hpp"
#include "congestion_lab/load.hpp"
#include "congestion_lab/remetrize.hpp"
#include "congestion_lab/sssp.hpp"

namespace {

conlab::Graph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return conlab::from_json(ss.str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::trunc | std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congestion scaling laboratory"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate a graph family instance");
  std::string gen_family, gen_out;
  conlab::GeneratorSpec spec;
  gen->add_option("--family", gen_family, "family name")->required();
  gen->add_option("--k", spec.k, "tree degree");
  gen->add_option("--p", spec.p, "tessellation face size");
  gen->add_option("--q", spec.q, "tessellation vertex degree");
  gen->add_option("--dim", spec.q_dim, "grid dimension");
  gen->add_option("--side", spec.side, "grid side length");
  gen->add_option("--r", spec.r, "regular graph degree");
  gen->add_option("--size", spec.size, "regular graph node count");
  gen->add_option("--radius", spec.radius, "ball radius n");
  gen->add_option("--seed", spec.seed, "seed for randomized families");
  gen->add_option("--out", gen_out, "output graph json")->required();

  // load
  auto* load_cmd = app.add_subcommand("load", "geodesic load profile");
  std::string load_graph, load_out;
  bool load_weighted = false;
  load_cmd->add_option("--graph", load_graph)->required();
  load_cmd->add_flag("--weighted", load_weighted, "route on edge lengths");
  load_cmd->add_option("--out", load_out)->required();

  // analyze
  auto* an = app.add_subcommand("analyze", "bounds, certificate or delta");
  std::string an_graph, an_out;
  bool an_cert = false, an_delta = false, an_bounds = false, an_weighted = false;
  int an_delta_cap = 400;
  an->add_option("--graph", an_graph)->required();
  an->add_flag("--cert", an_cert, "wedge-cut certificate (rooted planar input)");
  an->add_flag("--delta", an_delta, "four-point delta-hyperbolicity");
  an->add_flag("--bounds", an_bounds, "closed-form bounds");
  an->add_flag("--weighted", an_weighted, "use edge lengths as the metric");
  an->add_option("--delta-cap", an_delta_cap, "node cap for the quadruple scan");
  an->add_option("--out", an_out)->required();

  // remetrize
  auto* rem = app.add_subcommand("remetrize", "apply a weight scheme");
  std::string rem_graph, rem_scheme, rem_out;
  double rem_c = 1.0, rem_lo = 0.5, rem_hi = 2.0, rem_beta = 0.5;
  uint64_t rem_seed = 0;
  rem->add_option("--graph", rem_graph)->required();
  rem->add_option("--scheme", rem_scheme, "uniform|bounded_random|sphere_geometric|sphere_calibrated")
      ->required();
  rem->add_option("--c", rem_c);
  rem->add_option("--lo", rem_lo);
  rem->add_option("--hi", rem_hi);
  rem->add_option("--beta", rem_beta);
  rem->add_option("--seed", rem_seed);
  rem->add_option("--out", rem_out)->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a config-driven sweep");
  std::string exp_config;
  exp->add_option("--config", exp_config, "flat key=value config file")->required();

  // fit
  auto* fit_cmd = app.add_subcommand("fit", "log-log fit of two csv columns");
  std::string fit_csv, fit_x = "N", fit_y = "max_load", fit_out;
  fit_cmd->add_option("--csv", fit_csv)->required();
  fit_cmd->add_option("--x", fit_x, "x column (default N)");
  fit_cmd->add_option("--y", fit_y, "y column (default max_load)");
  fit_cmd->add_option("--out", fit_out, "optional json output");

  // plot
  auto* plot = app.add_subcommand("plot", "log-log svg scatter of a sweep csv");
  std::string plot_csv, plot_svg;
  std::vector<double> plot_refs;
  plot->add_option("--csv", plot_csv)->required();
  plot->add_option("--svg", plot_svg)->required();
  plot->add_option("--ref-slope", plot_refs, "reference slope guide line(s)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      spec.family = conlab::family_from_name(gen_family);
      conlab::Graph g = conlab::generate(spec);
      write_file(gen_out, conlab::to_json(g));
      std::cout << "wrote " << gen_out << " (N=" << g.node_count() << ", edges=" << g.edge_count()
                << ")\n";
    } else if (*load_cmd) {
      conlab::Graph g = read_graph(load_graph);
      conlab::LoadProfile p = conlab::geodesic_load(g, load_weighted);
      nlohmann::ordered_json j;
      j["load"] = p.load;
      j["max"] = p.max_load;
      j["argmax"] = p.argmax;
      j["total_demand"] = p.total_demand;
      write_file(load_out, j.dump() + "\n");
      std::cout << "max load " << p.max_load << " at node " << p.argmax << "\n";
    } else if (*an) {
      if (!an_cert && !an_delta && !an_bounds)
        throw std::runtime_error("analyze: pick at least one of --cert/--delta/--bounds");
      conlab::Graph g = read_graph(an_graph);
      nlohmann::ordered_json j;
      j["n"] = g.node_count();
      if (an_bounds) {
        auto ds = conlab::degree_stats(g);
        double diam = conlab::diameter(g, an_weighted);
        nlohmann::ordered_json b;
        b["diameter"] = diam;
        b["max_degree"] = ds.max_degree;
        b["mean_degree"] = ds.mean_degree;
        b["lemma_bound"] = conlab::lemma_upper_bound(ds.max_degree, diam);
        if (g.has_layers()) {
          int radius = *std::max_element(g.layers().begin(), g.layers().end());
          b["radius"] = radius;
          if (radius >= 1) b["theorem1_bound"] = conlab::theorem1_bound(g.node_count(), radius);
        }
        j["bounds"] = std::move(b);
      }
      if (an_cert) {
        if (!g.root()) throw std::runtime_error("analyze --cert: graph has no root");
        auto cert = conlab::wedge_cut(g, *g.root());
        nlohmann::ordered_json c;
        c["root"] = cert.root;
        c["ray_count"] = cert.rays.size();
        c["rays"] = cert.rays;
        c["split_index"] = cert.split_index;
        c["wedge_size"] = cert.wedge_size;
        c["complement_size"] = cert.complement_size;
        c["cut_path"] = cert.cut_path;
        c["bound"] = cert.bound;
        c["theorem_bound"] = cert.theorem_bound;
        j["certificate"] = std::move(c);
      }
      if (an_delta) j["delta"] = conlab::delta_hyperbolicity(g, an_weighted, an_delta_cap);
      write_file(an_out, j.dump() + "\n");
      std::cout << "wrote " << an_out << "\n";
    } else if (*rem) {
      conlab::Graph g = read_graph(rem_graph);
      conlab::WeightScheme scheme;
      if (rem_scheme == "uniform")
        scheme = conlab::WeightScheme::uniform(rem_c);
      else if (rem_scheme == "bounded_random")
        scheme = conlab::WeightScheme::bounded_random(rem_lo, rem_hi, rem_seed);
      else if (rem_scheme == "sphere_geometric")
        scheme = conlab::WeightScheme::sphere_geometric(rem_beta);
      else if (rem_scheme == "sphere_calibrated")
        scheme = conlab::WeightScheme::sphere_calibrated(rem_c);
      else
        throw std::runtime_error("remetrize: unknown scheme " + rem_scheme);
      conlab::Graph out = conlab::apply_weights(g, scheme);
      write_file(rem_out, conlab::to_json(out));
      auto bad = conlab::check_triangle(out);
      std::cout << "wrote " << rem_out << "; triangle violations: " << bad.size() << "\n";
    } else if (*exp) {
      conlab::ExperimentConfig cfg = conlab::load_config(exp_config);
      auto rows = conlab::run_experiment(cfg);
      std::cout << cfg.name << ": " << rows.size() << " rows -> " << cfg.csv_path << "\n";
    } else if (*fit_cmd) {
      auto fit = conlab::fit_from_csv(fit_csv, fit_x, fit_y);
      nlohmann::ordered_json j = {{"slope", fit.slope},
                                  {"intercept", fit.intercept},
                                  {"r_squared", fit.r_squared},
                                  {"slope_stderr", fit.slope_stderr},
                                  {"points_used", fit.points_used}};
      if (!fit_out.empty()) write_file(fit_out, j.dump() + "\n");
      std::cout << j.dump() << "\n";
    } else if (*plot) {
      conlab::emit_plot(plot_csv, plot_svg, plot_refs);
      std::cout << "wrote " << plot_svg << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
