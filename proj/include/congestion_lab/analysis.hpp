// analysis.hpp — constructive wedge-cut certificate, closed-form bounds,
// four-point delta-hyperbolicity estimation and scaling-exponent fits.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "congestion_lab/graph.hpp"
#include "congestion_lab/parallel.hpp"
#include "congestion_lab/sssp.hpp"

namespace conlab {

struct GeodesicTree {
  NodeId root = 0;
  std::vector<NodeId> parent;              // -1 at the root
  std::vector<std::vector<NodeId>> rays;   // root-to-leaf paths, clockwise
};

// BFS tree in which each node's parent is its first smaller-layer neighbor in
// rotation order; rays are root-to-leaf paths enumerated clockwise by the
// rotation system, anchored at the root's first rotation entry.
inline GeodesicTree geodesic_spanning_tree(const Graph& g, NodeId root) {
  g.check_node(root);
  if (!g.has_rotation())
    throw std::invalid_argument("geodesic_spanning_tree: rotation system required");
  const NodeId n = g.node_count();
  std::vector<int> dist;
  std::vector<NodeId> queue;
  detail::bfs_dist(g, root, dist, queue);
  if (static_cast<NodeId>(queue.size()) != n)
    throw std::runtime_error("geodesic_spanning_tree: graph is disconnected");

  GeodesicTree t;
  t.root = root;
  t.parent.assign(n, -1);
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId v = 0; v < n; ++v) {
    if (v == root) continue;
    for (NodeId u : g.rotation()[v])
      if (dist[u] == dist[v] - 1) {
        t.parent[v] = u;
        break;
      }
  }
  // children in the parent's rotation order, starting after the parent edge
  for (NodeId v = 0; v < n; ++v) {
    const auto& rot = g.rotation()[v];
    size_t anchor = 0;
    if (v != root) {
      for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == t.parent[v]) {
          anchor = i + 1;
          break;
        }
    }
    for (size_t i = 0; i < rot.size(); ++i) {
      NodeId w = rot[(anchor + i) % rot.size()];
      if (w != v && t.parent[w] == v) children[v].push_back(w);
    }
  }
  // depth-first walk records one ray per leaf
  std::vector<NodeId> path{root};
  std::vector<size_t> pos{0};
  while (!path.empty()) {
    NodeId v = path.back();
    if (pos.back() < children[v].size()) {
      NodeId c = children[v][pos.back()];
      ++pos.back();
      path.push_back(c);
      pos.push_back(0);
    } else {
      if (children[v].empty()) t.rays.push_back(path);
      path.pop_back();
      pos.pop_back();
    }
  }
  return t;
}

struct CutCertificate {
  NodeId root = 0;
  std::vector<std::vector<NodeId>> rays;
  int split_index = 0;       // i0, 1-based: first index with |W_i| >= N/2
  int wedge_size = 0;        // |W_{i0}|
  int complement_size = 0;   // N - |W_{i0}|
  std::vector<NodeId> cut_path;  // nodes of gamma_1 union gamma_{i0}, sorted
  double bound = 0.0;            // (wedge * complement / 2) / |cut_path|
  double theorem_bound = 0.0;    // N^2/(16 n) - N/8
};

inline double theorem1_bound(int64_t N, int64_t n) {
  if (n < 1) throw std::invalid_argument("theorem1_bound: n must be >= 1");
  double Nd = static_cast<double>(N);
  return Nd * Nd / (16.0 * static_cast<double>(n)) - Nd / 8.0;
}

// Clockwise wedge construction: W_i is the union of the first i rays; the
// certificate records the first i0 covering half the nodes and the cut path
// gamma_1 union gamma_{i0} that all wedge-to-complement traffic must cross.
inline CutCertificate wedge_cut(const Graph& g, NodeId root) {
  GeodesicTree tree = geodesic_spanning_tree(g, root);
  const NodeId n_nodes = g.node_count();
  std::vector<int> dist;
  std::vector<NodeId> queue;
  detail::bfs_dist(g, root, dist, queue);
  const int radius = *std::max_element(dist.begin(), dist.end());

  CutCertificate cert;
  cert.root = root;
  cert.rays = tree.rays;
  std::vector<char> seen(n_nodes, 0);
  int covered = 0;
  int i0 = -1;
  int wedge_size = 0;
  int prev_size = 0;
  for (size_t i = 0; i < cert.rays.size(); ++i) {
    for (NodeId v : cert.rays[i])
      if (!seen[v]) {
        seen[v] = 1;
        ++covered;
      }
    // Eq.-audit: past the first ray every union step may add at most
    // `radius` nodes (the root is always shared)
    if (i > 0 && covered - prev_size > radius)
      throw std::logic_error("wedge_cut: wedge growth exceeded the ball radius");
    prev_size = covered;
    if (i0 < 0 && 2 * covered >= n_nodes) {
      i0 = static_cast<int>(i);
      wedge_size = covered;
    }
  }
  if (covered != n_nodes)
    throw std::logic_error("wedge_cut: rays do not cover the graph");
  if (i0 < 0) throw std::logic_error("wedge_cut: rays failed to cover half the graph");
  cert.split_index = i0 + 1;
  cert.wedge_size = wedge_size;
  cert.complement_size = n_nodes - wedge_size;
  cert.cut_path = cert.rays[0];
  cert.cut_path.insert(cert.cut_path.end(), cert.rays[static_cast<size_t>(i0)].begin(),
                       cert.rays[static_cast<size_t>(i0)].end());
  std::sort(cert.cut_path.begin(), cert.cut_path.end());
  cert.cut_path.erase(std::unique(cert.cut_path.begin(), cert.cut_path.end()),
                      cert.cut_path.end());
  cert.bound = 0.5 * static_cast<double>(cert.wedge_size) *
               static_cast<double>(cert.complement_size) /
               static_cast<double>(cert.cut_path.size());
  cert.theorem_bound = radius >= 1 ? theorem1_bound(n_nodes, radius) : 0.0;
  return cert;
}

// Degree-diameter load bound: Delta^2 (Delta-1)^max(D-2,0) D^2, with D rounded
// up to an integer hop count.
inline double lemma_upper_bound(int delta_max, double D) {
  if (delta_max < 1) throw std::invalid_argument("lemma_upper_bound: degree must be >= 1");
  if (D < 0.0) throw std::invalid_argument("lemma_upper_bound: diameter must be >= 0");
  double Di = std::ceil(D);
  double expo = std::max(Di - 2.0, 0.0);
  double d = static_cast<double>(delta_max);
  return d * d * std::pow(d - 1.0, expo) * Di * Di;
}

inline double bollobas_bound(int r, double N, double C) {
  if (r <= 2) throw std::invalid_argument("bollobas_bound: r must be >= 3");
  if (N <= 1.0) throw std::invalid_argument("bollobas_bound: N must exceed 1");
  double base = std::log(static_cast<double>(r - 1));
  double l1 = std::log(N) / base;
  return l1 + std::log(l1) / base + C;
}

// Limit congestion exponent of the sphere-wired construction.
inline double construction_exponent(int k) {
  if (k < 3) throw std::invalid_argument("construction_exponent: k must be >= 3");
  return std::log(2.0 * k - 1.0) / std::log(static_cast<double>(k - 1));
}

// Four-point delta: half the maximal gap between the two largest of the three
// pairwise distance sums, maximized over all node quadruples. Exact distances
// come from an all-sources sweep; the scan itself is brute force.
inline double delta_hyperbolicity(const Graph& g, bool weighted, int max_nodes = 400,
                                  int threads = 0) {
  const NodeId n = g.node_count();
  if (n > max_nodes) throw std::invalid_argument("delta_hyperbolicity: size cap exceeded");
  std::vector<std::vector<double>> d(static_cast<size_t>(n));
  {
    std::vector<int> hops;
    std::vector<NodeId> queue;
    for (NodeId s = 0; s < n; ++s) {
      if (weighted) {
        detail::dijkstra_dist(g, s, d[static_cast<size_t>(s)]);
        for (double x : d[static_cast<size_t>(s)])
          if (x == kUnreachable)
            throw std::runtime_error("delta_hyperbolicity: graph is disconnected");
      } else {
        detail::bfs_dist(g, s, hops, queue);
        if (static_cast<NodeId>(queue.size()) != n)
          throw std::runtime_error("delta_hyperbolicity: graph is disconnected");
        d[static_cast<size_t>(s)].assign(hops.begin(), hops.end());
      }
    }
  }
  if (n < 4) return 0.0;
  std::vector<double> best_per_chunk;
  constexpr int64_t kChunk = 4;
  const int64_t n_chunks = (n + kChunk - 1) / kChunk;
  best_per_chunk.assign(static_cast<size_t>(n_chunks), 0.0);
  for_each_chunk(n, kChunk, threads, [&](int64_t c, int64_t begin, int64_t end) {
    double best = 0.0;
    for (NodeId i = static_cast<NodeId>(begin); i < end; ++i) {
      const double* di = d[static_cast<size_t>(i)].data();
      for (NodeId j = i + 1; j < n; ++j) {
        const double* dj = d[static_cast<size_t>(j)].data();
        const double dij = di[j];
        for (NodeId k = j + 1; k < n; ++k) {
          const double* dk = d[static_cast<size_t>(k)].data();
          const double dik = di[k], djk = dj[k];
          for (NodeId l = k + 1; l < n; ++l) {
            double s1 = dij + dk[l];
            double s2 = dik + dj[l];
            double s3 = di[l] + djk;
            double hi = std::max(s1, std::max(s2, s3));
            double lo = std::min(s1, std::min(s2, s3));
            double mid = s1 + s2 + s3 - hi - lo;
            best = std::max(best, hi - mid);
          }
        }
      }
    }
    best_per_chunk[static_cast<size_t>(c)] = best;
  });
  double best = 0.0;
  for (double b : best_per_chunk) best = std::max(best, b);
  return 0.5 * best;
}

struct ScalingFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double slope_stderr = 0.0;
  int points_used = 0;
};

// Least squares on (log N, log T); the slope is the empirical congestion
// exponent. Two points give the exact slope with r^2 = 1 by convention.
inline ScalingFit fit_scaling(std::span<const std::pair<double, double>> points) {
  const int m = static_cast<int>(points.size());
  if (m < 2) throw std::invalid_argument("fit_scaling: need at least 2 points");
  std::vector<double> xs(m), ys(m);
  for (int i = 0; i < m; ++i) {
    auto [N, T] = points[i];
    if (!(N > 0.0) || !(T > 0.0))
      throw std::invalid_argument("fit_scaling: points must be positive");
    xs[i] = std::log(N);
    ys[i] = std::log(T);
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (xs[i] == xs[j]) throw std::invalid_argument("fit_scaling: duplicate N");
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < m; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  ScalingFit fit;
  fit.points_used = m;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (int i = 0; i < m; ++i) {
    double e = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ss_res += e * e;
  }
  fit.r_squared = syy > 0.0 ? std::max(0.0, 1.0 - ss_res / syy) : 1.0;
  fit.slope_stderr = m > 2 ? std::sqrt(std::max(0.0, ss_res / (m - 2)) / sxx) : 0.0;
  if (m == 2) fit.r_squared = 1.0;
  return fit;
}

}  // namespace conlab
