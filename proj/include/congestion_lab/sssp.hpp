// sssp.hpp — single-source shortest paths (hop and weighted metrics),
// diameter, ball/sphere extraction and degree statistics.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "congestion_lab/graph.hpp"

namespace conlab {

// Unreachable nodes keep this sentinel; it is never a large finite number.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

// Relative tolerance for recognizing equal-length weighted geodesics.
// Remetrization produces ties by symmetry that must be detected for
// equal-split routing. Edge lengths are assumed to be much larger than
// kTieRel times the graph diameter.
inline constexpr double kTieRel = 1e-12;

inline bool tie_equal(double a, double b) {
  return std::abs(a - b) <= kTieRel * std::max(std::abs(a), std::abs(b));
}

struct SsspResult {
  NodeId source = 0;
  std::vector<double> dist;                // kUnreachable where not reached
  std::vector<double> sigma;               // number of distinct geodesics
  std::vector<std::vector<NodeId>> preds;  // shortest-path DAG predecessors
};

inline SsspResult bfs_sssp(const Graph& g, NodeId source) {
  g.check_node(source);
  const NodeId n = g.node_count();
  SsspResult r;
  r.source = source;
  r.dist.assign(n, kUnreachable);
  r.sigma.assign(n, 0.0);
  r.preds.assign(n, {});
  std::vector<NodeId> queue;
  queue.reserve(n);
  r.dist[source] = 0.0;
  r.sigma[source] = 1.0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (const auto& nb : g.neighbors(u)) {
      NodeId v = nb.to;
      if (r.dist[v] == kUnreachable) {
        r.dist[v] = r.dist[u] + 1.0;
        queue.push_back(v);
      }
      if (r.dist[v] == r.dist[u] + 1.0) {
        r.sigma[v] += r.sigma[u];
        r.preds[v].push_back(u);
      }
    }
  }
  return r;
}

inline SsspResult dijkstra_sssp(const Graph& g, NodeId source) {
  g.check_node(source);
  const NodeId n = g.node_count();
  SsspResult r;
  r.source = source;
  r.dist.assign(n, kUnreachable);
  r.sigma.assign(n, 0.0);
  r.preds.assign(n, {});
  std::vector<char> settled(n, 0);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  r.dist[source] = 0.0;
  r.sigma[source] = 1.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const auto& nb : g.neighbors(u)) {
      NodeId v = nb.to;
      double nd = d + nb.length;
      if (r.dist[v] == kUnreachable || (nd < r.dist[v] && !tie_equal(nd, r.dist[v]))) {
        r.dist[v] = nd;
        r.sigma[v] = r.sigma[u];
        r.preds[v].assign(1, u);
        heap.push({nd, v});
      } else if (tie_equal(nd, r.dist[v])) {
        r.sigma[v] += r.sigma[u];
        r.preds[v].push_back(u);
      }
    }
  }
  return r;
}

namespace detail {

// Hop distances only, reusing caller-provided buffers.
inline void bfs_dist(const Graph& g, NodeId source, std::vector<int>& dist,
                     std::vector<NodeId>& queue) {
  dist.assign(g.node_count(), -1);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (const auto& nb : g.neighbors(u))
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[u] + 1;
        queue.push_back(nb.to);
      }
  }
}

inline void dijkstra_dist(const Graph& g, NodeId source, std::vector<double>& dist) {
  dist.assign(g.node_count(), kUnreachable);
  std::vector<char> settled(g.node_count(), 0);
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = 1;
    for (const auto& nb : g.neighbors(u)) {
      double nd = d + nb.length;
      if (nd < dist[nb.to]) {
        dist[nb.to] = nd;
        heap.push({nd, nb.to});
      }
    }
  }
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  std::vector<int> dist;
  std::vector<NodeId> queue;
  detail::bfs_dist(g, 0, dist, queue);
  return static_cast<NodeId>(queue.size()) == g.node_count();
}

// Exact diameter by an all-sources sweep. Disconnected input is an error.
inline double diameter(const Graph& g, bool weighted) {
  const NodeId n = g.node_count();
  double best = 0.0;
  if (weighted) {
    std::vector<double> dist;
    for (NodeId s = 0; s < n; ++s) {
      detail::dijkstra_dist(g, s, dist);
      for (double d : dist) {
        if (d == kUnreachable) throw std::runtime_error("diameter: graph is disconnected");
        best = std::max(best, d);
      }
    }
  } else {
    std::vector<int> dist;
    std::vector<NodeId> queue;
    for (NodeId s = 0; s < n; ++s) {
      detail::bfs_dist(g, s, dist, queue);
      if (static_cast<NodeId>(queue.size()) != n)
        throw std::runtime_error("diameter: graph is disconnected");
      for (int d : dist) best = std::max(best, static_cast<double>(d));
    }
  }
  return best;
}

// Induced subgraph on all nodes within hop distance <= radius of center.
// Nodes are re-indexed deterministically in BFS discovery order, exploring
// neighbors in visit_order (rotation order when present, ascending id
// otherwise). Rotation is restricted to surviving neighbors preserving the
// cyclic order; layers are recomputed; the center becomes the root (id 0).
inline Graph ball(const Graph& g, NodeId center, int radius) {
  g.check_node(center);
  if (radius < 0) throw std::invalid_argument("ball: radius must be >= 0");
  const NodeId n = g.node_count();
  std::vector<int> dist(n, -1);
  std::vector<NodeId> order;
  order.reserve(n);
  dist[center] = 0;
  order.push_back(center);
  for (size_t head = 0; head < order.size(); ++head) {
    NodeId u = order[head];
    if (dist[u] == radius) continue;
    for (NodeId v : g.visit_order(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        order.push_back(v);
      }
  }
  std::vector<NodeId> new_id(n, -1);
  for (size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<NodeId>(i);

  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
      edges.push_back({new_id[e.u], new_id[e.v], e.length});

  std::optional<std::vector<std::vector<NodeId>>> rotation;
  if (g.has_rotation()) {
    rotation.emplace(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
      for (NodeId w : g.rotation()[order[i]])
        if (new_id[w] >= 0) (*rotation)[i].push_back(new_id[w]);
    }
  }
  std::vector<int> layer(order.size());
  for (size_t i = 0; i < order.size(); ++i) layer[i] = dist[order[i]];

  return Graph(static_cast<NodeId>(order.size()), std::move(edges), std::move(rotation),
               std::move(layer), NodeId{0}, g.family());
}

// Nodes at hop distance exactly `radius` from center, ascending ids.
inline std::vector<NodeId> sphere(const Graph& g, NodeId center, int radius) {
  g.check_node(center);
  if (radius < 0) throw std::invalid_argument("sphere: radius must be >= 0");
  std::vector<int> dist;
  std::vector<NodeId> queue;
  detail::bfs_dist(g, center, dist, queue);
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (dist[v] == radius) out.push_back(v);
  return out;
}

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  double mean_degree = 0.0;
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  s.min_degree = std::numeric_limits<int>::max();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    int d = g.degree(v);
    s.min_degree = std::min(s.min_degree, d);
    s.max_degree = std::max(s.max_degree, d);
  }
  s.mean_degree = 2.0 * static_cast<double>(g.edge_count()) / g.node_count();
  return s;
}

}  // namespace conlab
