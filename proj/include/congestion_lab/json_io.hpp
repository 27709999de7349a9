// json_io.hpp — canonical JSON graph schema.
//
// {"n": int, "root": int|null, "family": string, "edges": [[u,v,length],...],
//  "rotation": [[...],...]|null, "layer": [int,...]|null}
//
// Edges sorted by (min(u,v), max(u,v)); fixed key order; newline-terminated.
// Round trips are lossless and byte-stable for a fixed input.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "congestion_lab/graph.hpp"

namespace conlab {

inline std::string to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.node_count();
  if (g.root())
    j["root"] = *g.root();
  else
    j["root"] = nullptr;
  j["family"] = g.family();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.length});
  j["edges"] = std::move(edges);
  if (g.has_rotation()) {
    auto rot = nlohmann::ordered_json::array();
    for (const auto& r : g.rotation()) rot.push_back(r);
    j["rotation"] = std::move(rot);
  } else {
    j["rotation"] = nullptr;
  }
  if (g.has_layers())
    j["layer"] = g.layers();
  else
    j["layer"] = nullptr;
  return j.dump() + "\n";
}

inline Graph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("graph json: parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::runtime_error("graph json: missing required keys");
  if (!j["n"].is_number_integer())
    throw std::runtime_error("graph json: n must be an integer");
  NodeId n = j["n"].get<NodeId>();

  std::vector<Edge> edges;
  if (!j["edges"].is_array()) throw std::runtime_error("graph json: edges must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
        !e[1].is_number_integer() || !e[2].is_number())
      throw std::runtime_error("graph json: edge must be [u, v, length]");
    edges.push_back({e[0].get<NodeId>(), e[1].get<NodeId>(), e[2].get<double>()});
  }

  std::optional<std::vector<std::vector<NodeId>>> rotation;
  if (j.contains("rotation") && !j["rotation"].is_null()) {
    if (!j["rotation"].is_array()) throw std::runtime_error("graph json: bad rotation");
    rotation.emplace();
    for (const auto& r : j["rotation"]) {
      if (!r.is_array()) throw std::runtime_error("graph json: bad rotation row");
      rotation->push_back(r.get<std::vector<NodeId>>());
    }
  }
  std::optional<std::vector<int>> layer;
  if (j.contains("layer") && !j["layer"].is_null())
    layer = j["layer"].get<std::vector<int>>();
  std::optional<NodeId> root;
  if (j.contains("root") && !j["root"].is_null()) root = j["root"].get<NodeId>();
  std::string family = j.value("family", std::string{});

  // Graph construction re-checks every structural invariant.
  try {
    return Graph(n, std::move(edges), std::move(rotation), std::move(layer), root,
                 std::move(family));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("graph json: ") + e.what());
  }
}

}  // namespace conlab
