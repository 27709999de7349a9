// graph.hpp — immutable finite simple weighted graph with optional planar
// rotation system, layer labels (hop distance to a root) and a root node.
//
// Invariants enforced at construction:
//   * node ids are exactly 0..N-1, no self-loops, no duplicate edges
//   * every edge length > 0 and finite
//   * a rotation, when present, is per node a permutation of its neighbors
//   * layers, when present, equal the unweighted distance from the root
//
// A constructed Graph is never mutated; concurrent reads are safe.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conlab {

using NodeId = int32_t;

struct Edge {
  NodeId u = 0, v = 0;  // canonical form keeps u < v
  double length = 1.0;
};

struct Neighbor {
  NodeId to;
  double length;
};

class Graph {
 public:
  Graph(NodeId n, std::vector<Edge> edges,
        std::optional<std::vector<std::vector<NodeId>>> rotation = std::nullopt,
        std::optional<std::vector<int>> layer = std::nullopt,
        std::optional<NodeId> root = std::nullopt, std::string family = "")
      : n_(n),
        edges_(std::move(edges)),
        rotation_(std::move(rotation)),
        layer_(std::move(layer)),
        root_(root),
        family_(std::move(family)) {
    if (n_ < 1) throw std::invalid_argument("graph: node count must be >= 1");
    canonicalize_edges();
    build_adjacency();
    validate_rotation();
    validate_root_and_layers();
  }

  NodeId node_count() const { return n_; }
  int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }

  // Edges in canonical order: u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Neighbor> neighbors(NodeId v) const {
    check_node(v);
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  int degree(NodeId v) const {
    check_node(v);
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }

  // Neighbor ids in the canonical visiting order: rotation order when a
  // rotation system is present, ascending id otherwise. Deterministic BFS
  // exploration (ball extraction, re-indexing) is defined in terms of this.
  std::span<const NodeId> visit_order(NodeId v) const {
    check_node(v);
    if (rotation_) return {(*rotation_)[v].data(), (*rotation_)[v].size()};
    return {visit_ids_.data() + offsets_[v], visit_ids_.data() + offsets_[v + 1]};
  }

  bool has_rotation() const { return rotation_.has_value(); }
  const std::vector<std::vector<NodeId>>& rotation() const {
    if (!rotation_) throw std::logic_error("graph: no rotation system");
    return *rotation_;
  }

  bool has_layers() const { return layer_.has_value(); }
  const std::vector<int>& layers() const {
    if (!layer_) throw std::logic_error("graph: no layer labels");
    return *layer_;
  }
  int layer(NodeId v) const {
    check_node(v);
    return layers()[v];
  }

  std::optional<NodeId> root() const { return root_; }
  const std::string& family() const { return family_; }

  void check_node(NodeId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: node id out of range");
  }

 private:
  void canonicalize_edges() {
    for (auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw std::invalid_argument("graph: edge endpoint out of range");
      if (!(e.length > 0.0) || !std::isfinite(e.length))
        throw std::invalid_argument("graph: edge length must be positive and finite");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
        throw std::invalid_argument("graph: duplicate edge");
  }

  void build_adjacency() {
    offsets_.assign(static_cast<size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (NodeId v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
    adj_.resize(edges_.size() * 2);
    visit_ids_.resize(edges_.size() * 2);
    std::vector<int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      adj_[cursor[e.u]] = {e.v, e.length};
      adj_[cursor[e.v]] = {e.u, e.length};
      ++cursor[e.u];
      ++cursor[e.v];
    }
    // canonical edge order already sorts each adjacency list by neighbor id
    for (NodeId v = 0; v < n_; ++v)
      for (int64_t i = offsets_[v]; i < offsets_[v + 1]; ++i)
        visit_ids_[i] = adj_[i].to;
  }

  void validate_rotation() {
    if (!rotation_) return;
    auto& rot = *rotation_;
    if (static_cast<NodeId>(rot.size()) != n_)
      throw std::invalid_argument("graph: rotation size mismatch");
    std::vector<NodeId> sorted;
    for (NodeId v = 0; v < n_; ++v) {
      if (static_cast<int>(rot[v].size()) != degree(v))
        throw std::invalid_argument("graph: rotation is not a permutation of the neighbor set");
      sorted.assign(rot[v].begin(), rot[v].end());
      std::sort(sorted.begin(), sorted.end());
      auto nb = visit_order_raw(v);
      for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != nb[i])
          throw std::invalid_argument("graph: rotation lists a non-neighbor");
      // canonical start: cyclic order is what matters, so rotate the stored
      // list to begin at the smallest neighbor id for byte-stable output
      if (!rot[v].empty()) {
        auto it = std::min_element(rot[v].begin(), rot[v].end());
        std::rotate(rot[v].begin(), it, rot[v].end());
      }
    }
  }

  std::span<const NodeId> visit_order_raw(NodeId v) const {
    return {visit_ids_.data() + offsets_[v], visit_ids_.data() + offsets_[v + 1]};
  }

  void validate_root_and_layers() {
    if (root_) check_node(*root_);
    if (!layer_) return;
    if (!root_) throw std::invalid_argument("graph: layers require a root");
    if (static_cast<NodeId>(layer_->size()) != n_)
      throw std::invalid_argument("graph: layer size mismatch");
    // layers must equal hop distance from the root
    std::vector<int> dist(static_cast<size_t>(n_), -1);
    std::vector<NodeId> queue;
    queue.reserve(static_cast<size_t>(n_));
    dist[*root_] = 0;
    queue.push_back(*root_);
    for (size_t head = 0; head < queue.size(); ++head) {
      NodeId u = queue[head];
      for (const auto& nb : neighbors(u)) {
        if (dist[nb.to] < 0) {
          dist[nb.to] = dist[u] + 1;
          queue.push_back(nb.to);
        }
      }
    }
    for (NodeId v = 0; v < n_; ++v)
      if ((*layer_)[v] != dist[v])
        throw std::invalid_argument("graph: layer labels disagree with root distance");
  }

  NodeId n_;
  std::vector<Edge> edges_;
  std::optional<std::vector<std::vector<NodeId>>> rotation_;
  std::optional<std::vector<int>> layer_;
  std::optional<NodeId> root_;
  std::string family_;

  std::vector<int64_t> offsets_;
  std::vector<Neighbor> adj_;
  std::vector<NodeId> visit_ids_;
};

}  // namespace conlab
