// remetrize.hpp — edge-weight modification schemes and their validity checks.
//
// apply_weights never changes topology: node count, edge set, rotation and
// layers are carried over untouched; only lengths are scaled by multipliers.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congestion_lab/graph.hpp"
#include "congestion_lab/rng.hpp"
#include "congestion_lab/sssp.hpp"

namespace conlab {

struct WeightScheme {
  enum class Kind { uniform, bounded_random, sphere_geometric, sphere_calibrated };
  Kind kind = Kind::uniform;
  double c = 1.0;       // uniform / sphere_calibrated
  double lo = 1.0, hi = 1.0;  // bounded_random
  double beta = 0.5;    // sphere_geometric
  uint64_t seed = 0;    // bounded_random

  static WeightScheme uniform(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
      throw std::invalid_argument("weight scheme: c must be positive and finite");
    WeightScheme s;
    s.kind = Kind::uniform;
    s.c = c;
    return s;
  }
  static WeightScheme bounded_random(double lo, double hi, uint64_t seed) {
    if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi))
      throw std::invalid_argument("weight scheme: need 0 < lo <= hi < inf");
    WeightScheme s;
    s.kind = Kind::bounded_random;
    s.lo = lo;
    s.hi = hi;
    s.seed = seed;
    return s;
  }
  static WeightScheme sphere_geometric(double beta) {
    if (!(beta > 0.0) || !(beta < 1.0))
      throw std::invalid_argument("weight scheme: beta must be in (0, 1)");
    WeightScheme s;
    s.kind = Kind::sphere_geometric;
    s.beta = beta;
    return s;
  }
  static WeightScheme sphere_calibrated(double c) {
    if (!(c > 0.0) || !std::isfinite(c))
      throw std::invalid_argument("weight scheme: c must be positive and finite");
    WeightScheme s;
    s.kind = Kind::sphere_calibrated;
    s.c = c;
    return s;
  }

  const char* name() const {
    switch (kind) {
      case Kind::uniform: return "uniform";
      case Kind::bounded_random: return "bounded_random";
      case Kind::sphere_geometric: return "sphere_geometric";
      case Kind::sphere_calibrated: return "sphere_calibrated";
    }
    return "?";
  }
};

// Sphere schemes scale only intra-sphere edges (both endpoints at layer k get
// multiplier w_k; radial edges keep multiplier 1): shrinking the rings while
// the radii stay fixed is what makes the ball mimic a Euclidean disk. The
// calibrated scheme pins ring length to c*(k+1)/|S_k| so each ring's total
// circumference grows linearly with its radius.
inline Graph apply_weights(const Graph& g, const WeightScheme& scheme) {
  const auto& edges_in = g.edges();
  std::vector<Edge> edges;
  edges.reserve(edges_in.size());
  std::vector<int64_t> sphere_size;
  if (scheme.kind == WeightScheme::Kind::sphere_geometric ||
      scheme.kind == WeightScheme::Kind::sphere_calibrated) {
    if (!g.has_layers() || !g.root())
      throw std::invalid_argument("apply_weights: sphere schemes require layers and a root");
    const auto& layer = g.layers();
    int max_layer = *std::max_element(layer.begin(), layer.end());
    sphere_size.assign(static_cast<size_t>(max_layer) + 1, 0);
    for (int l : layer) ++sphere_size[l];
  }
  for (size_t i = 0; i < edges_in.size(); ++i) {
    const Edge& e = edges_in[i];
    double w = 1.0;
    switch (scheme.kind) {
      case WeightScheme::Kind::uniform:
        w = scheme.c;
        break;
      case WeightScheme::Kind::bounded_random: {
        // per-edge stream keyed by the canonical edge index, so the result is
        // independent of evaluation order
        Rng rng(sub_seed(scheme.seed, static_cast<uint64_t>(i)));
        w = scheme.lo + (scheme.hi - scheme.lo) * rng.unit();
        break;
      }
      case WeightScheme::Kind::sphere_geometric: {
        int ku = g.layer(e.u), kv = g.layer(e.v);
        w = (ku == kv) ? std::pow(scheme.beta, ku) : 1.0;
        break;
      }
      case WeightScheme::Kind::sphere_calibrated: {
        int ku = g.layer(e.u), kv = g.layer(e.v);
        w = (ku == kv) ? scheme.c * (ku + 1) / static_cast<double>(sphere_size[ku]) : 1.0;
        break;
      }
    }
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::logic_error("apply_weights: produced a non-positive multiplier");
    edges.push_back({e.u, e.v, w * e.length});
  }
  std::optional<std::vector<std::vector<NodeId>>> rotation;
  if (g.has_rotation()) rotation = g.rotation();
  std::optional<std::vector<int>> layer;
  if (g.has_layers()) layer = g.layers();
  return Graph(g.node_count(), std::move(edges), std::move(rotation), std::move(layer), g.root(),
               g.family());
}

// Every 3-cycle whose longest edge exceeds the sum of the other two.
// Advisory: violations are surfaced for the experimenter, not rejected.
inline std::vector<std::array<NodeId, 3>> check_triangle(const Graph& g) {
  std::vector<std::array<NodeId, 3>> bad;
  std::map<std::pair<NodeId, NodeId>, double> len;
  for (const auto& e : g.edges()) len[{e.u, e.v}] = e.length;
  auto edge_len = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return len.at({a, b});
  };
  for (const auto& e : g.edges()) {
    // common neighbors above v keep each triangle unique: u < v < w
    for (const auto& nb : g.neighbors(e.u)) {
      NodeId w = nb.to;
      if (w <= e.v) continue;
      bool adj = false;
      for (const auto& nb2 : g.neighbors(e.v))
        if (nb2.to == w) {
          adj = true;
          break;
        }
      if (!adj) continue;
      double a = e.length, b = edge_len(e.u, w), c = edge_len(e.v, w);
      if (a > b + c || b > a + c || c > a + b) bad.push_back({e.u, e.v, w});
    }
  }
  return bad;
}

// Ratio of remetrized to original geodesic distance over sampled node pairs.
inline std::pair<double, double> distance_distortion(const Graph& original,
                                                     const Graph& remetrized, int sample_pairs,
                                                     uint64_t seed) {
  if (original.node_count() != remetrized.node_count())
    throw std::invalid_argument("distance_distortion: node counts differ");
  if (original.node_count() < 2)
    throw std::invalid_argument("distance_distortion: need at least 2 nodes");
  if (sample_pairs < 1) throw std::invalid_argument("distance_distortion: need >= 1 pair");
  const NodeId n = original.node_count();
  Rng rng(seed);
  std::map<NodeId, std::vector<NodeId>> by_source;
  for (int i = 0; i < sample_pairs; ++i) {
    NodeId u = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n)));
    NodeId v = static_cast<NodeId>(rng.below(static_cast<uint64_t>(n) - 1));
    if (v >= u) ++v;
    by_source[u].push_back(v);
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  std::vector<double> d0, d1;
  for (const auto& [u, targets] : by_source) {
    detail::dijkstra_dist(original, u, d0);
    detail::dijkstra_dist(remetrized, u, d1);
    for (NodeId v : targets) {
      if (d0[v] == kUnreachable || d1[v] == kUnreachable)
        throw std::runtime_error("distance_distortion: sampled pair is disconnected");
      double r = d1[v] / d0[v];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
  }
  return {lo, hi};
}

}  // namespace conlab
