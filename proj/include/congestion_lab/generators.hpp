// generators.hpp — seeded, deterministic constructors for every graph family
// used by the congestion experiments.
#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "congestion_lab/graph.hpp"
#include "congestion_lab/rng.hpp"
#include "congestion_lab/sssp.hpp"

namespace conlab {

enum class Family {
  regular_tree,
  hpq,
  sphere_wired,
  grid,
  tree_cross_z,
  bridged_grids,
  random_regular,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::regular_tree: return "regular_tree";
    case Family::hpq: return "hpq";
    case Family::sphere_wired: return "sphere_wired";
    case Family::grid: return "grid";
    case Family::tree_cross_z: return "tree_cross_z";
    case Family::bridged_grids: return "bridged_grids";
    case Family::random_regular: return "random_regular";
  }
  return "?";
}

inline Family family_from_name(const std::string& s) {
  for (Family f : {Family::regular_tree, Family::hpq, Family::sphere_wired, Family::grid,
                   Family::tree_cross_z, Family::bridged_grids, Family::random_regular})
    if (s == family_name(f)) return f;
  throw std::invalid_argument("unknown family: " + s);
}

struct GeneratorSpec {
  Family family = Family::grid;
  int k = 0;       // tree degree
  int p = 0, q = 0;  // tessellation parameters
  int q_dim = 0;   // grid dimension
  int side = 0;    // grid side L
  int r = 0;       // random regular degree
  int size = 0;    // random regular node count N
  int radius = 0;  // ball radius n
  uint64_t seed = 0;
};

namespace detail {

inline std::vector<int> layers_from_root(NodeId n, const std::vector<Edge>& edges, NodeId root) {
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> dist(n, -1);
  std::vector<NodeId> queue{root};
  dist[root] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    NodeId u = queue[head];
    for (NodeId v : adj[u])
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  for (int d : dist)
    if (d < 0) throw std::runtime_error("generator produced a disconnected rooted graph");
  return dist;
}

// Uniform simple r-regular graph on the given node set via the configuration
// model: pair stubs uniformly and reject the whole sample on any loop or
// parallel edge. Rejection keeps the distribution exactly uniform over simple
// r-regular graphs.
inline std::vector<Edge> configuration_model(const std::vector<NodeId>& nodes, int r, Rng& rng,
                                             int max_tries) {
  const int m = static_cast<int>(nodes.size());
  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(m) * r);
  std::vector<Edge> out;
  std::vector<std::vector<int>> seen(m);  // local-index adjacency for the parallel check
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    stubs.clear();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < r; ++j) stubs.push_back(i);
    rng.shuffle(stubs);
    out.clear();
    for (auto& s : seen) s.clear();
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      auto& sa = seen[a];
      bool dup = false;
      for (int x : sa)
        if (x == b) {
          dup = true;
          break;
        }
      if (dup) {
        ok = false;
        break;
      }
      sa.push_back(b);
      seen[b].push_back(a);
      out.push_back({nodes[a], nodes[b], 1.0});
    }
    if (ok) return out;
  }
  throw std::runtime_error("configuration model: rejection retry limit exceeded");
}

// Regular-ish wiring of one sphere. Small spheres (|S| <= k) fall back to a
// complete graph; an odd stub count drops one vertex to degree k-1.
inline std::vector<Edge> wire_sphere(const std::vector<NodeId>& nodes, int k, Rng& rng,
                                     int max_tries) {
  const int m = static_cast<int>(nodes.size());
  std::vector<Edge> out;
  if (m <= 1) return out;
  if (m <= k) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) out.push_back({nodes[i], nodes[j], 1.0});
    return out;
  }
  if ((static_cast<int64_t>(m) * k) % 2 == 0) return configuration_model(nodes, k, rng, max_tries);
  // near-regular: last vertex gets degree k-1 by pairing its missing stub away
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<int> stubs;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < (i == m - 1 ? k - 1 : k); ++j) stubs.push_back(i);
    rng.shuffle(stubs);
    out.clear();
    std::vector<std::vector<int>> seen(m);
    bool ok = true;
    // odd total is impossible here by construction: m*k odd means k odd and m odd,
    // so m*k - 1 is even
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      bool dup = false;
      for (int x : seen[a])
        if (x == b) {
          dup = true;
          break;
        }
      if (dup) {
        ok = false;
        break;
      }
      seen[a].push_back(b);
      seen[b].push_back(a);
      out.push_back({nodes[a], nodes[b], 1.0});
    }
    if (ok) return out;
  }
  throw std::runtime_error("sphere wiring: rejection retry limit exceeded");
}

// -----------------------------------------------------------------------------
// {p,q} tessellation builder.
//
// The combinatorial ball is grown face by face in spiral order. The patch is
// always a closed disk; its boundary is kept as a doubly linked cycle and each
// vertex keeps a "fan": its incident neighbors in rotation order, where every
// consecutive fan pair already bounds a completed face. For a boundary vertex
// the fan runs from its boundary successor (front) to its boundary
// predecessor (back); the angular gap between back and front faces the outer
// region.
//
// One face is attached per step at a pivot vertex u. The face glues along the
// maximal boundary path through u forced by face counts: a vertex whose face
// count would reach q must have its whole wedge covered by this face, so the
// glue path extends through it. The remaining p - |path| face vertices are
// brand new. Completing pivots in creation order (a FIFO of vertices) yields
// the canonical spiral numbering: layer by layer, rotation order.
// -----------------------------------------------------------------------------
class TilingBuilder {
 public:
  TilingBuilder(int p, int q) : p_(p), q_(q) {}

  // Completes every vertex of corona layer <= max_layer, then returns the
  // oversized patch (rotation system included, no layer labels).
  Graph build(int max_layer, const std::string& family_tag) {
    NodeId v0 = new_vertex(0);
    for (size_t head = 0; head < created_.size(); ++head) {
      NodeId v = created_[head];
      if (layer_[v] > max_layer) break;
      complete(v);
    }
    (void)v0;
    std::vector<std::vector<NodeId>> rotation;
    rotation.reserve(fan_.size());
    for (auto& f : fan_) rotation.emplace_back(f.begin(), f.end());
    return Graph(static_cast<NodeId>(fan_.size()), std::move(edges_), std::move(rotation),
                 std::nullopt, NodeId{0}, family_tag);
  }

 private:
  NodeId new_vertex(int layer) {
    NodeId v = static_cast<NodeId>(fan_.size());
    fan_.emplace_back();
    nfaces_.push_back(0);
    next_b_.push_back(-1);
    prev_b_.push_back(-1);
    layer_.push_back(layer);
    created_.push_back(v);
    return v;
  }

  int remaining(NodeId v) const { return q_ - nfaces_[v]; }

  void complete(NodeId v) {
    while (nfaces_[v] < q_) add_face(v);
  }

  void add_edge(NodeId a, NodeId b) { edges_.push_back({a, b, 1.0}); }

  // Attach the next face in the angular gap of `u`, gluing along the boundary
  // edge (u, prev_b[u]) and along every further boundary edge forced by
  // vertices whose wedge this face must close.
  void add_face(NodeId u) {
    if (fan_[u].empty()) {
      seed_face(u);
      return;
    }
    // glue path in boundary order: path.front() --> ... --> path.back()
    std::vector<NodeId> path;
    path.push_back(prev_b_[u]);
    path.push_back(u);
    while (remaining(path.front()) == 1) path.insert(path.begin(), prev_b_[path.front()]);
    if (remaining(u) == 1) {
      path.push_back(next_b_[u]);
      while (remaining(path.back()) == 1) path.push_back(next_b_[path.back()]);
    }
    const int glued = static_cast<int>(path.size());
    if (glued > p_)
      throw std::logic_error("tiling: face glue path exceeds p (invalid parameters)");
    const int fresh = p_ - glued;
    NodeId back = path.front();
    NodeId front = path.back();
    const int pivot_layer = layer_[u];

    // interior vertices of the glue path get their last face and leave the
    // boundary
    for (int i = 1; i + 1 < glued; ++i) {
      NodeId x = path[static_cast<size_t>(i)];
      ++nfaces_[x];
      next_b_[x] = prev_b_[x] = -1;
    }
    // fresh arc replaces the glued path on the boundary:
    //   back -> new_1 -> ... -> new_fresh -> front
    NodeId prev = back;
    for (int i = 0; i < fresh; ++i) {
      NodeId w = new_vertex(pivot_layer + 1);
      add_edge(prev, w);
      if (prev == back) {
        fan_[back].push_front(w);
      } else {
        fan_[prev].push_front(w);  // prev is fresh: [next, prev_b] ordering
      }
      fan_[w].push_back(prev);  // becomes its prev_b
      next_b_[prev] = w;
      prev_b_[w] = prev;
      ++nfaces_[prev];
      prev = w;
    }
    add_edge(prev, front);
    if (prev == back) {
      fan_[back].push_front(front);
    } else {
      fan_[prev].push_front(front);
    }
    fan_[front].push_back(prev);
    next_b_[prev] = front;
    prev_b_[front] = prev;
    ++nfaces_[prev];
    ++nfaces_[front];
  }

  // Very first face around an isolated vertex: a fresh p-cycle.
  void seed_face(NodeId u) {
    std::vector<NodeId> ring{u};
    for (int i = 0; i < p_ - 1; ++i) ring.push_back(new_vertex(layer_[u] + 1));
    for (int i = 0; i < p_; ++i) {
      NodeId a = ring[static_cast<size_t>(i)];
      NodeId b = ring[static_cast<size_t>((i + 1) % p_)];
      add_edge(a, b);
      next_b_[a] = b;
      prev_b_[b] = a;
    }
    for (NodeId a : ring) {
      fan_[a].push_back(next_b_[a]);
      fan_[a].push_back(prev_b_[a]);
      ++nfaces_[a];
    }
  }

  int p_, q_;
  std::vector<std::deque<NodeId>> fan_;
  std::vector<int> nfaces_;
  std::vector<NodeId> next_b_, prev_b_;
  std::vector<int> layer_;
  std::vector<NodeId> created_;
  std::vector<Edge> edges_;
};

}  // namespace detail

// Ball of radius n of the infinite k-regular tree: the root has degree k and
// every other internal node degree k. Rotation lists the parent first, then
// children in creation order.
inline Graph gen_regular_tree(int k, int n) {
  if (k < 3) throw std::invalid_argument("gen_regular_tree: k must be >= 3");
  if (n < 0) throw std::invalid_argument("gen_regular_tree: n must be >= 0");
  std::string tag = "regular_tree(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
  std::vector<Edge> edges;
  std::vector<std::vector<NodeId>> rotation(1);
  std::vector<int> layer{0};
  NodeId next = 1;
  std::vector<NodeId> frontier{0};
  for (int depth = 1; depth <= n; ++depth) {
    std::vector<NodeId> fresh;
    for (NodeId parent : frontier) {
      int children = (depth == 1) ? k : k - 1;
      for (int c = 0; c < children; ++c) {
        NodeId w = next++;
        rotation.emplace_back();
        rotation[w].push_back(parent);
        rotation[parent].push_back(w);
        layer.push_back(depth);
        edges.push_back({parent, w, 1.0});
        fresh.push_back(w);
      }
    }
    frontier = std::move(fresh);
  }
  return Graph(next, std::move(edges), std::move(rotation), std::move(layer), NodeId{0}, tag);
}

// Radius-n combinatorial ball of the {p,q} tessellation of the hyperbolic
// plane. Requires 1/p + 1/q < 1/2. The patch is generated oversized (all
// corona layers <= n completed, so every node within hop distance n is
// interior) and trimmed with ball() to get exact ball semantics.
inline Graph gen_hpq(int p, int q, int n) {
  if (p < 3 || q < 3) throw std::invalid_argument("gen_hpq: need p, q >= 3");
  if (2 * (p + q) >= p * q)
    throw std::invalid_argument("gen_hpq: need 1/p + 1/q < 1/2 (hyperbolic parameters)");
  if (n < 0) throw std::invalid_argument("gen_hpq: n must be >= 0");
  std::string tag =
      "hpq(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")";
  if (n == 0) return Graph(1, {}, std::vector<std::vector<NodeId>>{{}}, std::vector<int>{0},
                           NodeId{0}, tag);
  detail::TilingBuilder builder(p, q);
  Graph patch = builder.build(n, tag);
  return ball(patch, 0, n);
}

// gen_regular_tree(k, n) plus, on every sphere S_p (1 <= p <= n), a uniformly
// sampled simple k-regular graph (configuration model with rejection).
// Deterministic per seed; every sphere draws from its own sub-seeded stream,
// so spheres can be wired in any order with unchanged output.
inline Graph gen_sphere_wired(int k, int n, uint64_t seed, int max_tries = 100000) {
  if (k < 3) throw std::invalid_argument("gen_sphere_wired: k must be >= 3");
  if (n < 1) throw std::invalid_argument("gen_sphere_wired: n must be >= 1");
  Graph tree = gen_regular_tree(k, n);
  std::vector<Edge> edges = tree.edges();
  const auto& layer = tree.layers();
  std::vector<std::vector<NodeId>> spheres(static_cast<size_t>(n) + 1);
  for (NodeId v = 0; v < tree.node_count(); ++v) spheres[layer[v]].push_back(v);
  for (int d = 1; d <= n; ++d) {
    Rng rng(sub_seed(seed, static_cast<uint64_t>(d)));
    auto wired = detail::wire_sphere(spheres[d], k, rng, max_tries);
    edges.insert(edges.end(), wired.begin(), wired.end());
  }
  std::string tag = "sphere_wired(k=" + std::to_string(k) + ",n=" + std::to_string(n) +
                    ",seed=" + std::to_string(seed) + ")";
  // intra-sphere edges keep all root distances intact, so tree layers stand
  return Graph(tree.node_count(), std::move(edges), std::nullopt,
               std::vector<int>(layer.begin(), layer.end()), NodeId{0}, tag);
}

// Axis-aligned box {0..L-1}^dim with nearest-neighbor unit edges, row-major
// node numbering, root at the center cell. The 2-dimensional box carries the
// standard planar rotation system.
inline Graph gen_grid(int q_dim, int L) {
  if (q_dim < 1) throw std::invalid_argument("gen_grid: dimension must be >= 1");
  if (L < 2) throw std::invalid_argument("gen_grid: side must be >= 2");
  int64_t n64 = 1;
  for (int d = 0; d < q_dim; ++d) {
    n64 *= L;
    if (n64 > 50'000'000) throw std::invalid_argument("gen_grid: box too large");
  }
  const NodeId n = static_cast<NodeId>(n64);
  std::vector<int64_t> stride(q_dim, 1);
  for (int d = 1; d < q_dim; ++d) stride[d] = stride[d - 1] * L;
  std::vector<Edge> edges;
  std::vector<int> coord(q_dim, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (int d = 0; d < q_dim; ++d)
      if (coord[d] + 1 < L) edges.push_back({v, static_cast<NodeId>(v + stride[d]), 1.0});
    for (int d = 0; d < q_dim; ++d) {
      if (++coord[d] < L) break;
      coord[d] = 0;
    }
  }
  NodeId root = 0;
  for (int d = 0; d < q_dim; ++d) root += static_cast<NodeId>((L / 2) * stride[d]);
  std::optional<std::vector<std::vector<NodeId>>> rotation;
  if (q_dim == 2) {
    rotation.emplace(n);
    for (NodeId v = 0; v < n; ++v) {
      int x = v % L, y = static_cast<int>(v / L);
      auto& r = (*rotation)[v];
      if (x + 1 < L) r.push_back(v + 1);
      if (y + 1 < L) r.push_back(v + L);
      if (x > 0) r.push_back(v - 1);
      if (y > 0) r.push_back(v - L);
    }
  }
  std::string tag = "grid(dim=" + std::to_string(q_dim) + ",L=" + std::to_string(L) + ")";
  auto layers = detail::layers_from_root(n, edges, root);
  return Graph(n, std::move(edges), std::move(rotation), std::move(layers), root, tag);
}

// Ball of radius n around (x0, 0) in T_3 x Z: node (t, z) is included iff
// d_T(x0, t) + |z| <= n; tree edges at fixed z, z +/- 1 edges at fixed t.
inline Graph gen_tree_cross_z(int n) {
  if (n < 0) throw std::invalid_argument("gen_tree_cross_z: n must be >= 0");
  std::string tag = "tree_cross_z(n=" + std::to_string(n) + ")";
  if (n == 0) return Graph(1, {}, std::nullopt, std::vector<int>{0}, NodeId{0}, tag);
  Graph tree = gen_regular_tree(3, n);
  const auto& tdist = tree.layers();
  // product node ids: (t, z) pairs, t in tree order, z ascending per t
  std::map<std::pair<NodeId, int>, NodeId> id;
  NodeId next = 0;
  for (NodeId t = 0; t < tree.node_count(); ++t)
    for (int z = -(n - tdist[t]); z <= n - tdist[t]; ++z) id[{t, z}] = next++;
  std::vector<Edge> edges;
  for (const auto& [key, v] : id) {
    auto [t, z] = key;
    auto up = id.find({t, z + 1});
    if (up != id.end()) edges.push_back({v, up->second, 1.0});
    for (const auto& nb : tree.neighbors(t)) {
      if (nb.to < t) continue;  // each tree edge once
      auto other = id.find({nb.to, z});
      if (other != id.end()) edges.push_back({v, other->second, 1.0});
    }
  }
  Graph product(next, std::move(edges), std::nullopt, std::nullopt, std::nullopt, tag);
  // trim through ball() for canonical numbering, layers and root semantics
  return ball(product, id[{0, 0}], n);
}

// Two disjoint L x L grids plus a single bridge edge joining their center
// cells; the root is the bridge endpoint of the first grid.
inline Graph gen_bridged_grids(int L) {
  if (L < 2) throw std::invalid_argument("gen_bridged_grids: side must be >= 2");
  Graph plane = gen_grid(2, L);
  const NodeId half = plane.node_count();
  std::vector<Edge> edges = plane.edges();
  for (const auto& e : plane.edges())
    edges.push_back({static_cast<NodeId>(e.u + half), static_cast<NodeId>(e.v + half), e.length});
  NodeId center = *plane.root();
  edges.push_back({center, static_cast<NodeId>(center + half), 1.0});
  std::string tag = "bridged_grids(L=" + std::to_string(L) + ")";
  auto layers = detail::layers_from_root(2 * half, edges, center);
  return Graph(2 * half, std::move(edges), std::nullopt, std::move(layers), center, tag);
}

// Uniform simple r-regular graph on N nodes (configuration model, whole-sample
// rejection). Connectivity is not guaranteed; callers check it where needed.
inline Graph gen_random_regular(int r, int N, uint64_t seed, int max_tries = 100000) {
  if (r < 3) throw std::invalid_argument("gen_random_regular: r must be >= 3");
  if (N <= r) throw std::invalid_argument("gen_random_regular: need N > r");
  if ((static_cast<int64_t>(r) * N) % 2 != 0)
    throw std::invalid_argument("gen_random_regular: r*N must be even");
  std::vector<NodeId> nodes(N);
  for (NodeId v = 0; v < N; ++v) nodes[v] = v;
  Rng rng(sub_seed(seed, 0));
  auto edges = detail::configuration_model(nodes, r, rng, max_tries);
  std::string tag = "random_regular(r=" + std::to_string(r) + ",N=" + std::to_string(N) +
                    ",seed=" + std::to_string(seed) + ")";
  return Graph(N, std::move(edges), std::nullopt, std::nullopt, std::nullopt, tag);
}

inline Graph generate(const GeneratorSpec& s) {
  switch (s.family) {
    case Family::regular_tree: return gen_regular_tree(s.k, s.radius);
    case Family::hpq: return gen_hpq(s.p, s.q, s.radius);
    case Family::sphere_wired: return gen_sphere_wired(s.k, s.radius, s.seed);
    case Family::grid: return gen_grid(s.q_dim, s.side);
    case Family::tree_cross_z: return gen_tree_cross_z(s.radius);
    case Family::bridged_grids: return gen_bridged_grids(s.side);
    case Family::random_regular: return gen_random_regular(s.r, s.size, s.seed);
  }
  throw std::invalid_argument("generate: unknown family");
}

}  // namespace conlab
