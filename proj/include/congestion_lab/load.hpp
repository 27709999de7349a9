// load.hpp — geodesic node load under one unit of demand per unordered node
// pair, split equally over all geodesics (dependency accumulation over the
// shortest-path DAG), plus an exact small-scale oracle.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "congestion_lab/graph.hpp"
#include "congestion_lab/parallel.hpp"
#include "congestion_lab/sssp.hpp"

namespace conlab {

enum class Routing { equal_split_geodesic };

struct LoadProfile {
  std::vector<double> load;  // demand units routed through the node, endpoints excluded
  double total_demand = 0.0;  // N(N-1)/2
  double max_load = 0.0;
  NodeId argmax = 0;
  Routing routing = Routing::equal_split_geodesic;
};

namespace detail {

struct BrandesScratch {
  std::vector<double> dist, sigma, delta;
  std::vector<NodeId> order;
  std::vector<char> settled;
  std::vector<std::pair<double, NodeId>> heap;
};

// Adds the one-source dependency contribution into `acc` and returns the
// eccentricity of `s`. Predecessors are recovered by edge rescan, so no
// per-node predecessor lists are kept.
inline double brandes_source(const Graph& g, NodeId s, bool weighted, BrandesScratch& ws,
                             std::vector<double>& acc) {
  const NodeId n = g.node_count();
  ws.dist.assign(n, kUnreachable);
  ws.sigma.assign(n, 0.0);
  ws.delta.assign(n, 0.0);
  ws.order.clear();
  ws.dist[s] = 0.0;
  ws.sigma[s] = 1.0;
  if (!weighted) {
    ws.order.push_back(s);
    for (size_t head = 0; head < ws.order.size(); ++head) {
      NodeId u = ws.order[head];
      double du = ws.dist[u];
      for (const auto& nb : g.neighbors(u)) {
        NodeId v = nb.to;
        if (ws.dist[v] == kUnreachable) {
          ws.dist[v] = du + 1.0;
          ws.order.push_back(v);
        }
        if (ws.dist[v] == du + 1.0) ws.sigma[v] += ws.sigma[u];
      }
    }
  } else {
    ws.settled.assign(n, 0);
    ws.heap.clear();
    auto cmp = [](const std::pair<double, NodeId>& a, const std::pair<double, NodeId>& b) {
      return a > b;  // min-heap
    };
    ws.heap.push_back({0.0, s});
    while (!ws.heap.empty()) {
      std::pop_heap(ws.heap.begin(), ws.heap.end(), cmp);
      auto [d, u] = ws.heap.back();
      ws.heap.pop_back();
      if (ws.settled[u]) continue;
      ws.settled[u] = 1;
      ws.order.push_back(u);
      for (const auto& nb : g.neighbors(u)) {
        NodeId v = nb.to;
        double nd = d + nb.length;
        if (ws.dist[v] == kUnreachable || (nd < ws.dist[v] && !tie_equal(nd, ws.dist[v]))) {
          ws.dist[v] = nd;
          ws.sigma[v] = ws.sigma[u];
          ws.heap.push_back({nd, v});
          std::push_heap(ws.heap.begin(), ws.heap.end(), cmp);
        } else if (tie_equal(nd, ws.dist[v])) {
          ws.sigma[v] += ws.sigma[u];
        }
      }
    }
  }
  if (ws.order.size() != static_cast<size_t>(n))
    throw std::runtime_error("geodesic load: graph is disconnected");
  // dependency accumulation in decreasing-distance order
  for (size_t i = ws.order.size(); i-- > 1;) {
    NodeId w = ws.order[i];
    double coef = (1.0 + ws.delta[w]) / ws.sigma[w];
    double dw = ws.dist[w];
    if (!weighted) {
      for (const auto& nb : g.neighbors(w))
        if (ws.dist[nb.to] + 1.0 == dw) ws.delta[nb.to] += ws.sigma[nb.to] * coef;
    } else {
      for (const auto& nb : g.neighbors(w))
        if (tie_equal(ws.dist[nb.to] + nb.length, dw)) ws.delta[nb.to] += ws.sigma[nb.to] * coef;
    }
    acc[w] += ws.delta[w];
  }
  return ws.dist[ws.order.back()];
}

struct LoadAndDiameter {
  LoadProfile profile;
  double diameter = 0.0;
};

// Sources are processed in fixed chunks whose partial sums merge in chunk
// order, so the result is bit-identical for every worker count.
inline LoadAndDiameter geodesic_load_with_diameter(const Graph& g, bool weighted,
                                                   int threads = 0) {
  const NodeId n = g.node_count();
  if (!is_connected(g)) throw std::runtime_error("geodesic load: graph is disconnected");
  constexpr int64_t kChunk = 64;
  const int64_t n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<std::vector<double>> partial(static_cast<size_t>(n_chunks));
  std::vector<double> ecc(static_cast<size_t>(n_chunks), 0.0);
  for_each_chunk(n, kChunk, threads, [&](int64_t c, int64_t begin, int64_t end) {
    auto& acc = partial[static_cast<size_t>(c)];
    acc.assign(n, 0.0);
    BrandesScratch ws;
    double e = 0.0;
    for (int64_t s = begin; s < end; ++s)
      e = std::max(e, brandes_source(g, static_cast<NodeId>(s), weighted, ws, acc));
    ecc[static_cast<size_t>(c)] = e;
  });
  LoadAndDiameter out;
  out.profile.load.assign(n, 0.0);
  for (int64_t c = 0; c < n_chunks; ++c) {
    const auto& acc = partial[static_cast<size_t>(c)];
    for (NodeId v = 0; v < n; ++v) out.profile.load[v] += acc[v];
    out.diameter = std::max(out.diameter, ecc[static_cast<size_t>(c)]);
  }
  // each unordered pair was accumulated from both endpoints
  for (NodeId v = 0; v < n; ++v) out.profile.load[v] *= 0.5;
  out.profile.total_demand = 0.5 * static_cast<double>(n) * (n - 1);
  out.profile.argmax = 0;
  out.profile.max_load = out.profile.load[0];
  for (NodeId v = 1; v < n; ++v)
    if (out.profile.load[v] > out.profile.max_load) {
      out.profile.max_load = out.profile.load[v];
      out.profile.argmax = v;
    }
  return out;
}

}  // namespace detail

inline LoadProfile geodesic_load(const Graph& g, bool weighted, int threads = 0) {
  return detail::geodesic_load_with_diameter(g, weighted, threads).profile;
}

// Independent oracle: enumerates every hop-metric geodesic of every pair
// explicitly and splits demand in exact rational arithmetic. Size-capped.
inline LoadProfile brute_force_load(const Graph& g) {
  using Rational = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;
  const NodeId n = g.node_count();
  if (n > 14) throw std::invalid_argument("brute_force_load: size cap is N <= 14");
  if (!is_connected(g)) throw std::runtime_error("brute_force_load: graph is disconnected");
  std::vector<Rational> load(n, Rational(0));
  std::vector<int> dist;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    detail::bfs_dist(g, s, dist, queue);
    for (NodeId t = s + 1; t < n; ++t) {
      // walk every geodesic backward from t along tight edges
      Int total = 0;
      std::vector<Int> through(n, Int(0));
      std::vector<NodeId> path{t};
      auto walk = [&](auto&& self, NodeId v) -> void {
        if (v == s) {
          ++total;
          for (size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
          return;
        }
        for (const auto& nb : g.neighbors(v))
          if (dist[nb.to] + 1 == dist[v]) {
            path.push_back(nb.to);
            self(self, nb.to);
            path.pop_back();
          }
      };
      walk(walk, t);
      for (NodeId v = 0; v < n; ++v)
        if (through[v] != 0) load[v] += Rational(through[v], total);
    }
  }
  LoadProfile out;
  out.load.resize(n);
  for (NodeId v = 0; v < n; ++v) out.load[v] = load[v].convert_to<double>();
  out.total_demand = 0.5 * static_cast<double>(n) * (n - 1);
  out.argmax = 0;
  out.max_load = out.load[0];
  for (NodeId v = 1; v < n; ++v)
    if (out.load[v] > out.max_load) {
      out.max_load = out.load[v];
      out.argmax = v;
    }
  return out;
}

inline double load_at(const Graph& g, const LoadProfile& p, NodeId v) {
  g.check_node(v);
  if (p.load.size() != static_cast<size_t>(g.node_count()))
    throw std::invalid_argument("load_at: profile does not match graph");
  return p.load[v];
}

inline std::pair<NodeId, double> max_load(const LoadProfile& p) {
  return {p.argmax, p.max_load};
}

struct LoadHistogram {
  double lo = 0.0, hi = 0.0, bin_width = 0.0;
  std::vector<int> counts;
};

inline LoadHistogram load_histogram(const LoadProfile& p, int bins) {
  if (bins < 1) throw std::invalid_argument("load_histogram: bins must be >= 1");
  if (p.load.empty()) throw std::invalid_argument("load_histogram: empty profile");
  LoadHistogram h;
  h.lo = *std::min_element(p.load.begin(), p.load.end());
  h.hi = *std::max_element(p.load.begin(), p.load.end());
  h.counts.assign(bins, 0);
  h.bin_width = (h.hi - h.lo) / bins;
  for (double x : p.load) {
    int b = h.bin_width > 0.0 ? static_cast<int>((x - h.lo) / h.bin_width) : 0;
    b = std::clamp(b, 0, bins - 1);
    ++h.counts[b];
  }
  return h;
}

}  // namespace conlab
